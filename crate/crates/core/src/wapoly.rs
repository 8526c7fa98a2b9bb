//! Wronskian Appell polynomials `A_λ` and the identities they satisfy.
//!
//! Three independent algorithms compute `A_λ`: the Wronskian determinant
//! over the degree vector, the augmented Schur function pushed through
//! `φ_A`, and a bottom-up recurrence over Young's lattice. The default
//! route runs all three and refuses to answer if they disagree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::appell::AppellSpec;
use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::exactpoly::{big_rat, binomial, rat, wronskian, Poly, Rat};
use crate::partition::{partitions_up_to, skew_syt_count, vandermonde, Partition};
use crate::symfunc::{phi_apply, schur};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Direct,
    Phi,
    Recurrence,
    #[default]
    CrossChecked,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Phi => "phi",
            Route::Recurrence => "recurrence",
            Route::CrossChecked => "cross-checked",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "direct" | "wronskian" => Ok(Route::Direct),
            "phi" | "schur" => Ok(Route::Phi),
            "recurrence" => Ok(Route::Recurrence),
            "cross-checked" | "cross" | "all" => Ok(Route::CrossChecked),
            other => Err(Error::Parse(format!("unknown route '{other}'"))),
        }
    }
}

fn big_f(lambda: &Partition) -> Rat {
    big_rat(BigInt::from(lambda.syt_count()))
}

/// Memoising evaluator of `A_λ` for a single Appell sequence.
///
/// Safe to share between threads; every cache holds values that are a pure
/// function of the key, so racing fills are harmless.
pub struct WapEngine {
    spec: AppellSpec,
    route: Route,
    cache: Mutex<HashMap<(Route, Partition), Poly>>,
    // F_λ A_λ, filled by the recurrence
    weighted: Mutex<HashMap<Partition, Poly>>,
    dual: OnceLock<Box<WapEngine>>,
}

impl WapEngine {
    /// An engine whose `get` uses the Wronskian route.
    pub fn new(spec: AppellSpec) -> Self {
        WapEngine::with_route(spec, Route::Direct)
    }

    pub fn with_route(spec: AppellSpec, route: Route) -> Self {
        WapEngine {
            spec,
            route,
            cache: Mutex::new(HashMap::new()),
            weighted: Mutex::new(HashMap::new()),
            dual: OnceLock::new(),
        }
    }

    pub fn spec(&self) -> &AppellSpec {
        &self.spec
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Engine for the dual sequence, sharing this engine's route.
    pub fn dual_engine(&self) -> &WapEngine {
        self.dual
            .get_or_init(|| Box::new(WapEngine::with_route(self.spec.dual(), self.route)))
    }

    /// `A_λ` via the engine's configured route.
    pub fn get(&self, lambda: &Partition) -> Result<Poly> {
        self.compute(lambda, self.route)
    }

    pub fn compute(&self, lambda: &Partition, route: Route) -> Result<Poly> {
        let key = (route, lambda.clone());
        if let Some(p) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(p.clone());
        }
        let value = match route {
            Route::Direct => self.direct(lambda)?,
            Route::Phi => self.via_phi(lambda)?,
            Route::Recurrence => self.recurrence(lambda)?,
            Route::CrossChecked => self.cross_checked(lambda)?,
        };
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(key, value.clone());
        Ok(value)
    }

    fn direct(&self, lambda: &Partition) -> Result<Poly> {
        let degrees = lambda.degree_vector();
        let polys = degrees
            .iter()
            .map(|&n| self.spec.appell_poly(n))
            .collect::<Result<Vec<_>>>()?;
        let signed: Vec<i64> = degrees.iter().map(|&n| n as i64).collect();
        let delta = vandermonde(&signed);
        assert!(!delta.is_zero(), "degree vector has repeated entries");
        wronskian(&polys).exact_div_scalar(&big_rat(delta))
    }

    fn via_phi(&self, lambda: &Partition) -> Result<Poly> {
        let phi = phi_apply(&self.spec, &schur(lambda))?;
        Ok(phi.scale(&big_rat(BigInt::from(lambda.hook_product()))))
    }

    fn recurrence(&self, lambda: &Partition) -> Result<Poly> {
        let g = self.weighted_recurrence(lambda)?;
        let f = big_f(lambda);
        let a = g.exact_div_scalar(&f)?;
        if a.degree() != Some(lambda.size()) || !a.is_monic() {
            return Err(Error::InexactDivision(format!(
                "F_{lambda} = {f} does not normalise the recurrence value {g}"
            )));
        }
        Ok(a)
    }

    /// `F_λ A_λ` from the generating recurrence over Young's lattice.
    fn weighted_recurrence(&self, lambda: &Partition) -> Result<Poly> {
        if let Some(p) = self.weighted.lock().expect("cache poisoned").get(lambda) {
            return Ok(p.clone());
        }
        let n = lambda.size();
        let value = if n == 0 {
            Poly::one()
        } else {
            let mut below = Poly::zero();
            for mu in lambda.covers_down() {
                below += &self.weighted_recurrence(&mu)?;
            }
            let mut acc = &Poly::x() * &below;
            let c = self.spec.cumulants(n)?;
            for k in 1..=n {
                if c[k - 1].is_zero() {
                    continue;
                }
                let mut hooks = Poly::zero();
                for h in lambda.rim_hooks_down(k) {
                    let term = self.weighted_recurrence(&h.inner)?;
                    hooks += &term.scale(&rat(h.sign()));
                }
                acc += &hooks.scale(&(&c[k - 1] * binomial(n - 1, k - 1)));
            }
            acc
        };
        self.weighted
            .lock()
            .expect("cache poisoned")
            .insert(lambda.clone(), value.clone());
        Ok(value)
    }

    fn cross_checked(&self, lambda: &Partition) -> Result<Poly> {
        let direct = self.compute(lambda, Route::Direct)?;
        for other in [Route::Phi, Route::Recurrence] {
            let value = self.compute(lambda, other)?;
            if value != direct {
                return Err(Error::RouteDisagreement {
                    partition: lambda.to_string(),
                    first: Route::Direct.name(),
                    second: other.name(),
                    first_value: direct.to_string(),
                    second_value: value.to_string(),
                });
            }
        }
        Ok(direct)
    }

    /// `F_λ A_λ` using the configured route.
    fn weighted(&self, lambda: &Partition) -> Result<Poly> {
        Ok(self.get(lambda)?.scale(&big_f(lambda)))
    }

    /// `F_λ A′_λ = |λ| Σ_{μ⋖λ} F_μ A_μ`.
    pub fn derivative_identity_check(&self, lambda: &Partition) -> Result<bool> {
        let lhs = self.get(lambda)?.derivative(1).scale(&big_f(lambda));
        let mut sum = Poly::zero();
        for mu in lambda.covers_down() {
            sum += &self.weighted(&mu)?;
        }
        Ok(lhs == sum.scale(&rat(lambda.size() as i64)))
    }

    /// `F_λA_λ = x Σ_{μ⋖λ} F_μA_μ + Σ_k c_k C(n−1,k−1) Σ_{ν} (−1)^{ht} F_νA_ν`
    /// evaluated on the configured route rather than the recurrence itself.
    pub fn genrec_check(&self, lambda: &Partition) -> Result<bool> {
        let n = lambda.size();
        if n == 0 {
            return Ok(self.get(lambda)? == Poly::one());
        }
        let mut below = Poly::zero();
        for mu in lambda.covers_down() {
            below += &self.weighted(&mu)?;
        }
        let mut rhs = &Poly::x() * &below;
        let c = self.spec.cumulants(n)?;
        for k in 1..=n {
            let mut hooks = Poly::zero();
            for h in lambda.rim_hooks_down(k) {
                hooks += &self.weighted(&h.inner)?.scale(&rat(h.sign()));
            }
            rhs += &hooks.scale(&(&c[k - 1] * binomial(n - 1, k - 1)));
        }
        Ok(self.weighted(lambda)? == rhs)
    }

    /// Both sides of the top-down relation adding rim hooks of size `k`.
    pub fn topdown_sides(&self, lambda: &Partition, k: usize) -> Result<(Poly, Poly)> {
        assert!(k >= 1, "rim hook size must be positive");
        let n = lambda.size();
        let fa = self.weighted(lambda)?;
        let c = self.spec.cumulant(k)?;
        let lhs = if k == 1 {
            (&Poly::linear(c) * &fa).scale(&rat(n as i64 + 1))
        } else {
            fa.scale(&(c * rat(k as i64) * binomial(n + k, k)))
        };
        let mut rhs = Poly::zero();
        for h in lambda.rim_hooks_up(k) {
            rhs += &self.weighted(&h.outer)?.scale(&rat(h.sign()));
        }
        Ok((lhs, rhs))
    }

    pub fn topdown_check(&self, lambda: &Partition, k: usize) -> Result<bool> {
        let (lhs, rhs) = self.topdown_sides(lambda, k)?;
        Ok(lhs == rhs)
    }

    /// `A*_λ = A_{λ′}`, together with the Appell property of `n ↦ A_{(1^n)}`
    /// at `n = |λ|`.
    pub fn dual_check(&self, lambda: &Partition) -> Result<bool> {
        let dual = self.dual_engine().get(lambda)?;
        if dual != self.get(&lambda.conjugate())? {
            return Ok(false);
        }
        let n = lambda.size();
        if n == 0 {
            return Ok(self.get(&Partition::empty())? == Poly::one());
        }
        let top = self.get(&Partition::column(n))?;
        let below = self.get(&Partition::column(n - 1))?;
        Ok(top.derivative(1) == below.scale(&rat(n as i64)))
    }

    /// `A**_λ = A_λ`, computed from the twice-dualised cumulant stream.
    pub fn double_dual_check(&self, lambda: &Partition) -> Result<bool> {
        Ok(self.dual_engine().dual_engine().get(lambda)? == self.get(lambda)?)
    }

    /// `A_{λ′}(x) = ρ^{|λ|} A_λ(ρ⁻¹x)` when the sequence is of exponential
    /// type `exp(α t^r)` up to order `|λ|`; `None` outside that class.
    pub fn rho_transform_check(&self, lambda: &Partition) -> Result<Option<bool>> {
        let n = lambda.size();
        let Some((_, r)) = self.spec.exp_rt_params(n)? else {
            return Ok(None);
        };
        Ok(Some(rho_transform(
            &self.get(lambda)?,
            &self.get(&lambda.conjugate())?,
            r,
            n,
        )))
    }

    pub fn integrality_check(&self, lambda: &Partition) -> Result<Integrality> {
        if !self.spec.integrality_hypothesis(lambda.size())? {
            return Ok(Integrality::HypothesisFails);
        }
        Ok(if self.get(lambda)?.is_integer_poly() {
            Integrality::Integral
        } else {
            Integrality::NotIntegral
        })
    }

    /// The three self-duality criteria over all `λ` with `|λ| ≤ max_size`.
    pub fn self_duality(&self, max_size: usize) -> Result<SelfDuality> {
        let mut conjugation_invariant = true;
        for lambda in partitions_up_to(max_size) {
            if self.get(&lambda)? != self.get(&lambda.conjugate())? {
                conjugation_invariant = false;
                break;
            }
        }
        let dual_equal = self.spec.dual().cumulants(max_size)? == self.spec.cumulants(max_size)?;
        Ok(SelfDuality {
            conjugation_invariant,
            dual_equal,
            even_cumulants_vanish: self.spec.even_cumulants_vanish(max_size)?,
        })
    }
}

impl fmt::Debug for WapEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WapEngine")
            .field("spec", &self.spec.name())
            .field("route", &self.route)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Integrality {
    HypothesisFails,
    Integral,
    NotIntegral,
}

impl Integrality {
    pub fn passes(self) -> bool {
        self != Integrality::NotIntegral
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelfDuality {
    pub conjugation_invariant: bool,
    pub dual_equal: bool,
    pub even_cumulants_vanish: bool,
}

impl SelfDuality {
    pub fn consistent(&self) -> bool {
        self.conjugation_invariant == self.dual_equal
            && self.dual_equal == self.even_cumulants_vanish
    }
}

/// Checks `conj(x) = ρ^n a(ρ⁻¹x)` in `ℚ(ζ_{2r})[x]` with `ρ = −ζ_{2r} = ζ_{2r}^{r+1}`.
pub fn rho_transform(a: &Poly, conj: &Poly, r: usize, n: usize) -> bool {
    let field = CyclotomicField::new(2 * r);
    let r = r as i64;
    let rho_n = field.zeta_pow((r + 1) * n as i64);
    let rho_inv = field.zeta_pow(r - 1);
    let rhs = field.scale_all(&field.substitute_scaled(a, &rho_inv), &rho_n);
    field.lift(conj) == rhs
}

pub fn wap_direct(spec: &AppellSpec, lambda: &Partition) -> Result<Poly> {
    WapEngine::new(spec.clone()).compute(lambda, Route::Direct)
}

pub fn wap_via_phi(spec: &AppellSpec, lambda: &Partition) -> Result<Poly> {
    WapEngine::new(spec.clone()).compute(lambda, Route::Phi)
}

pub fn wap_recurrence(spec: &AppellSpec, lambda: &Partition) -> Result<Poly> {
    WapEngine::new(spec.clone()).compute(lambda, Route::Recurrence)
}

pub fn wap(spec: &AppellSpec, lambda: &Partition, route: Route) -> Result<Poly> {
    WapEngine::new(spec.clone()).compute(lambda, route)
}

pub fn exp_rt_dual_transform_check(alpha: Rat, r: usize, lambda: &Partition) -> Result<bool> {
    let engine = WapEngine::new(AppellSpec::exp_rt(alpha, r)?);
    let a = engine.get(lambda)?;
    let conj = engine.get(&lambda.conjugate())?;
    Ok(rho_transform(&a, &conj, r, lambda.size()))
}

/// Constants `z_λ` with `z_∅ = 1` and the polynomials they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellNet {
    constants: BTreeMap<Partition, Rat>,
}

impl AppellNet {
    /// Missing constants are zero; `z_∅` is forced to 1.
    pub fn new(mut constants: BTreeMap<Partition, Rat>) -> Self {
        constants.insert(Partition::empty(), Rat::one());
        constants.retain(|_, v| !v.is_zero());
        AppellNet { constants }
    }

    /// `z_λ = A_λ(0)` for every `|λ| ≤ max_size`.
    pub fn from_engine(engine: &WapEngine, max_size: usize) -> Result<Self> {
        let mut constants = BTreeMap::new();
        for lambda in partitions_up_to(max_size) {
            let c = engine.get(&lambda)?.coeff(0);
            constants.insert(lambda, c);
        }
        Ok(AppellNet::new(constants))
    }

    pub fn constant(&self, lambda: &Partition) -> Rat {
        self.constants.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// `F_λ A_λ(x) = Σ_{μ⊆λ} C(|λ|,|μ|) F_{λ/μ} F_μ z_μ x^{|λ|−|μ|}`.
    pub fn poly(&self, lambda: &Partition) -> Result<Poly> {
        let n = lambda.size();
        let mut acc = Poly::zero();
        for (mu, z) in &self.constants {
            if !mu.is_contained_in(lambda) {
                continue;
            }
            let m = mu.size();
            let weight = binomial(n, m)
                * big_rat(BigInt::from(skew_syt_count(lambda, mu)))
                * big_f(mu)
                * z;
            acc += &Poly::monomial(weight, n - m);
        }
        acc.exact_div_scalar(&big_f(lambda))
    }
}

pub fn appell_net_poly(net: &AppellNet, lambda: &Partition) -> Result<Poly> {
    net.poly(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;
    use crate::partition::partitions_of;
    use crate::symfunc::e_gen;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn presets() -> Vec<AppellSpec> {
        vec![
            AppellSpec::monomial(),
            AppellSpec::hermite(),
            AppellSpec::yablonskii_vorobiev(),
            AppellSpec::exp_rt(rat(2), 4).unwrap(),
            AppellSpec::laguerre(rat(3)),
            AppellSpec::laguerre(ratio(1, 2)),
            AppellSpec::jacobi(ratio(1, 3), ratio(1, 5)),
        ]
    }

    #[test]
    fn direct_examples() {
        let he = AppellSpec::hermite();
        assert_eq!(wap_direct(&he, &p(&[2, 1])).unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
        for spec in presets() {
            assert_eq!(wap_direct(&spec, &Partition::empty()).unwrap(), Poly::one());
            for n in 1..=6 {
                assert_eq!(
                    wap_direct(&spec, &Partition::row(n)).unwrap(),
                    spec.appell_poly(n).unwrap()
                );
            }
        }
        let m = AppellSpec::monomial();
        for lambda in partitions_up_to(6) {
            assert_eq!(wap_direct(&m, &lambda).unwrap(), Poly::monomial(rat(1), lambda.size()));
        }
    }

    #[test]
    fn phi_examples() {
        let he = AppellSpec::hermite();
        assert_eq!(wap_via_phi(&he, &p(&[1, 1])).unwrap(), Poly::from_ints(&[1, 0, 1]));
        let la = AppellSpec::laguerre(rat(5));
        assert_eq!(wap_via_phi(&la, &p(&[1])).unwrap(), Poly::from_ints(&[5, 1]));
        for n in 1..=6 {
            assert_eq!(wap_via_phi(&he, &Partition::row(n)).unwrap(), he.appell_poly(n).unwrap());
        }
    }

    #[test]
    fn phi_of_elementary_is_column() {
        for spec in presets() {
            for n in 0..=6 {
                let lhs = phi_apply(&spec, &e_gen(n as i64))
                    .unwrap()
                    .scale(&crate::exactpoly::factorial_rat(n));
                assert_eq!(lhs, wap_direct(&spec, &Partition::column(n)).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        let he = AppellSpec::hermite();
        assert_eq!(wap_recurrence(&he, &p(&[2])).unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(wap_recurrence(&he, &p(&[2, 1])).unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
        let m = AppellSpec::monomial();
        for lambda in partitions_up_to(6) {
            assert_eq!(wap_recurrence(&m, &lambda).unwrap(), Poly::monomial(rat(1), lambda.size()));
        }
    }

    #[test]
    fn cross_checked_examples() {
        let cases = [
            (AppellSpec::hermite(), p(&[3, 2, 1])),
            (AppellSpec::yablonskii_vorobiev(), p(&[2, 2])),
            (AppellSpec::jacobi(ratio(1, 3), ratio(1, 5)), p(&[2, 1])),
        ];
        for (spec, lambda) in cases {
            wap(&spec, &lambda, Route::CrossChecked).unwrap();
        }
    }

    #[test]
    fn disagreement_is_reported() {
        let engine = WapEngine::new(AppellSpec::hermite());
        let lambda = p(&[2]);
        engine
            .cache
            .lock()
            .unwrap()
            .insert((Route::Phi, lambda.clone()), Poly::x());
        match engine.compute(&lambda, Route::CrossChecked) {
            Err(Error::RouteDisagreement { first, second, .. }) => {
                assert_eq!((first, second), ("direct", "phi"));
            }
            other => panic!("expected disagreement, got {other:?}"),
        }
    }

    #[test]
    fn routes_agree_on_presets() {
        for spec in presets() {
            let engine = WapEngine::with_route(spec, Route::CrossChecked);
            for lambda in partitions_up_to(6) {
                let a = engine.get(&lambda).unwrap();
                assert_eq!(a.degree(), Some(lambda.size()));
                assert!(a.is_monic());
            }
        }
    }

    #[test]
    fn zero_parts_do_not_change_the_polynomial() {
        let he = AppellSpec::hermite();
        let with_zeros = Partition::from_signed(&[3, 1, 0, 0]).unwrap();
        assert_eq!(
            wap_direct(&he, &with_zeros).unwrap(),
            wap_direct(&he, &p(&[3, 1])).unwrap()
        );
    }

    #[test]
    fn derivative_examples() {
        let he = WapEngine::new(AppellSpec::hermite());
        assert!(he.derivative_identity_check(&p(&[2, 1])).unwrap());
        for spec in presets() {
            assert!(WapEngine::new(spec).derivative_identity_check(&p(&[1])).unwrap());
        }
        let la = WapEngine::new(AppellSpec::laguerre(rat(2)));
        for lambda in partitions_of(4) {
            assert!(la.derivative_identity_check(&lambda).unwrap());
        }
    }

    #[test]
    fn topdown_examples() {
        let he = WapEngine::new(AppellSpec::hermite());
        let (lhs, rhs) = he.topdown_sides(&Partition::empty(), 2).unwrap();
        assert_eq!(lhs, Poly::from_ints(&[-2]));
        assert_eq!(rhs, Poly::from_ints(&[-2]));
        let (lhs, rhs) = he.topdown_sides(&p(&[1]), 3).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
        let m = WapEngine::new(AppellSpec::monomial());
        for lambda in partitions_up_to(5) {
            assert!(m.topdown_check(&lambda, 1).unwrap());
        }
    }

    #[test]
    fn exp_rt_topdown_vanishes_off_r() {
        let y = WapEngine::new(AppellSpec::yablonskii_vorobiev());
        for lambda in partitions_up_to(5) {
            for k in [2, 4] {
                let (lhs, rhs) = y.topdown_sides(&lambda, k).unwrap();
                assert!(lhs.is_zero() && rhs.is_zero());
            }
        }
    }

    #[test]
    fn dual_examples() {
        let he = WapEngine::new(AppellSpec::hermite());
        assert!(he.dual_check(&p(&[2, 1])).unwrap());
        assert_eq!(he.get(&p(&[2, 1])).unwrap(), he.get(&p(&[2, 1]).conjugate()).unwrap());
        let m = WapEngine::new(AppellSpec::monomial());
        assert!(m.dual_check(&p(&[3, 1])).unwrap());
        for alpha in [rat(2), ratio(1, 3)] {
            let pos = WapEngine::new(AppellSpec::laguerre(alpha.clone()));
            let neg = WapEngine::new(AppellSpec::laguerre(-alpha));
            for lambda in partitions_up_to(5) {
                let lhs = pos.get(&lambda.conjugate()).unwrap();
                let mut rhs = neg.get(&lambda).unwrap().reflect();
                if lambda.size() % 2 == 1 {
                    rhs = -rhs;
                }
                assert_eq!(lhs, rhs, "{lambda}");
            }
        }
    }

    #[test]
    fn rho_examples() {
        // r = 2, λ = (2): He_{(1,1)}(x) = ρ² He_2(ρ⁻¹x)
        assert!(exp_rt_dual_transform_check(ratio(-1, 2), 2, &p(&[2])).unwrap());
        assert!(exp_rt_dual_transform_check(rat(3), 1, &p(&[1])).unwrap());
        for lambda in partitions_of(4) {
            assert!(exp_rt_dual_transform_check(ratio(-4, 3), 3, &lambda).unwrap());
        }
        // The hermite polynomials fail the relation with the wrong root.
        let he = WapEngine::new(AppellSpec::hermite());
        let a = he.get(&p(&[2])).unwrap();
        let conj = he.get(&p(&[1, 1])).unwrap();
        assert!(!rho_transform(&a, &conj, 3, 2));
        assert_eq!(WapEngine::new(AppellSpec::laguerre(rat(1))).rho_transform_check(&p(&[2])).unwrap(), None);
    }

    #[test]
    fn integrality_examples() {
        let he = WapEngine::new(AppellSpec::hermite());
        for lambda in partitions_up_to(8) {
            assert_eq!(he.integrality_check(&lambda).unwrap(), Integrality::Integral);
        }
        let y = WapEngine::new(AppellSpec::yablonskii_vorobiev());
        for lambda in partitions_up_to(7) {
            assert_eq!(y.integrality_check(&lambda).unwrap(), Integrality::Integral);
        }
        let half = WapEngine::new(AppellSpec::laguerre(ratio(1, 2)));
        assert_eq!(half.integrality_check(&p(&[1])).unwrap(), Integrality::HypothesisFails);
    }

    #[test]
    fn self_duality_examples() {
        let he = WapEngine::new(AppellSpec::hermite()).self_duality(5).unwrap();
        assert!(he.consistent() && !he.conjugation_invariant);
        let y = WapEngine::new(AppellSpec::yablonskii_vorobiev()).self_duality(5).unwrap();
        assert!(y.consistent() && y.conjugation_invariant);
        let m = WapEngine::new(AppellSpec::monomial()).self_duality(5).unwrap();
        assert!(m.consistent() && m.conjugation_invariant);
    }

    #[test]
    fn net_examples() {
        let engine = WapEngine::new(AppellSpec::jacobi(ratio(1, 3), ratio(1, 5)));
        let net = AppellNet::from_engine(&engine, 6).unwrap();
        for lambda in partitions_up_to(6) {
            assert_eq!(appell_net_poly(&net, &lambda).unwrap(), engine.get(&lambda).unwrap());
        }
        let trivial = AppellNet::new(BTreeMap::new());
        for lambda in partitions_up_to(5) {
            assert_eq!(trivial.poly(&lambda).unwrap(), Poly::monomial(rat(1), lambda.size()));
        }
        let a = ratio(7, 2);
        let net = AppellNet::new(BTreeMap::from([(p(&[1]), a.clone())]));
        assert_eq!(net.poly(&p(&[1])).unwrap(), Poly::linear(a));
    }

    #[test]
    fn route_names_round_trip() {
        for r in [Route::Direct, Route::Phi, Route::Recurrence, Route::CrossChecked] {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("fast".parse::<Route>().is_err());
    }
}
