//! Appell sequences described by their cumulant stream.
//!
//! An Appell sequence has exponential generating function `e^{xt} f_A(t)`.
//! The moments `z_k = A_k(0)` are the coefficients of `f_A` and the cumulants
//! `c_k` those of `log f_A`; either stream determines the other. Cumulants are
//! the primary representation, except for sources whose moments are the
//! natural data (modified Jacobi, explicit moment lists), where cumulants are
//! derived on demand.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{binomial, factorial_rat, parse_rat, rat, ratio, Poly, Rat};

#[derive(Clone)]
pub struct AppellSpec {
    inner: Arc<SpecInner>,
}

struct SpecInner {
    name: String,
    source: Source,
    // prefixes z_0..z_n and c_1..c_n; only ever extended
    moments: Mutex<Vec<Rat>>,
    cumulants: Mutex<Vec<Rat>>,
}

#[derive(Clone)]
enum Source {
    /// `c_1, c_2, …`, zero beyond the list.
    Cumulants(Vec<Rat>),
    Laguerre(Rat),
    Jacobi(Rat, Rat),
    /// `z_0 = 1, z_1, …`, zero beyond the list.
    Moments(Vec<Rat>),
    Dual(AppellSpec),
    SecondMoment(AppellSpec),
    Centralized(AppellSpec),
    /// Keeps the base moments but reports a different `c_order`. The result
    /// is inconsistent on purpose; it exists to exercise the checkers.
    Corrupted {
        base: AppellSpec,
        order: usize,
        value: Rat,
    },
}

impl AppellSpec {
    fn build(name: impl Into<String>, source: Source) -> Self {
        AppellSpec {
            inner: Arc::new(SpecInner {
                name: name.into(),
                source,
                moments: Mutex::new(vec![Rat::one()]),
                cumulants: Mutex::new(Vec::new()),
            }),
        }
    }

    pub fn monomial() -> Self {
        Self::build("monomial", Source::Cumulants(Vec::new()))
    }

    /// Generating function `exp(xt + αt^r)`: `c_r = r!·α`, all other cumulants zero.
    pub fn exp_rt(alpha: Rat, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::Parse("exp-rt needs r >= 1".into()));
        }
        let name = format!("exp-rt:{alpha},{r}");
        Ok(Self::exp_rt_named(name, alpha, r))
    }

    fn exp_rt_named(name: String, alpha: Rat, r: usize) -> Self {
        let mut c = vec![Rat::zero(); r];
        c[r - 1] = factorial_rat(r) * alpha;
        Self::build(name, Source::Cumulants(c))
    }

    /// `(x + α)^n`
    pub fn shifted_monomial(alpha: Rat) -> Self {
        Self::exp_rt_named(format!("shifted-monomial:{alpha}"), alpha, 1)
    }

    /// Probabilists' Hermite polynomials, `exp(xt - t²/2)`.
    pub fn hermite() -> Self {
        Self::exp_rt_named("hermite".into(), ratio(-1, 2), 2)
    }

    /// `exp(xt - 4t³/3)`, the sequence behind the Yablonskii–Vorobiev polynomials.
    pub fn yablonskii_vorobiev() -> Self {
        Self::exp_rt_named("yablonskii".into(), ratio(-4, 3), 3)
    }

    /// Modified Laguerre polynomials with `f(t) = (1 + t)^α`.
    pub fn laguerre(alpha: Rat) -> Self {
        Self::build(format!("laguerre:{alpha}"), Source::Laguerre(alpha))
    }

    /// Modified Jacobi polynomials with `z_k = 2^k (-α)_k / (-α-β)_k`.
    pub fn jacobi(alpha: Rat, beta: Rat) -> Self {
        Self::build(format!("jacobi:{alpha},{beta}"), Source::Jacobi(alpha, beta))
    }

    pub fn from_cumulants(cumulants: Vec<Rat>) -> Self {
        let list: Vec<String> = cumulants.iter().map(ToString::to_string).collect();
        Self::build(
            format!("cumulants:{}", list.join(",")),
            Source::Cumulants(cumulants),
        )
    }

    pub fn from_moments(moments: Vec<Rat>) -> Result<Self> {
        match moments.first() {
            Some(z0) if z0.is_one() => {}
            Some(z0) => return Err(Error::NotAppellMoments(z0.to_string())),
            None => return Err(Error::NotAppellMoments("missing".into())),
        }
        let list: Vec<String> = moments.iter().map(ToString::to_string).collect();
        Ok(Self::build(
            format!("moments:{}", list.join(",")),
            Source::Moments(moments),
        ))
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// The dual sequence `n ↦ A_{(1^n)}`, with cumulants `(-1)^{k-1} c_k`.
    pub fn dual(&self) -> Self {
        Self::build(format!("dual({})", self.name()), Source::Dual(self.clone()))
    }

    /// The central sequence `B` with `c^B_k = c_k²/(k-1)!` for `k ≥ 2`.
    pub fn second_moment_spec(&self) -> Self {
        Self::build(
            format!("second-moment({})", self.name()),
            Source::SecondMoment(self.clone()),
        )
    }

    /// `Ã_n(x) = A_n(x - c_1)`: the same cumulants with `c_1 = 0`.
    pub fn centralize(&self) -> Self {
        Self::build(
            format!("central({})", self.name()),
            Source::Centralized(self.clone()),
        )
    }

    /// A copy whose reported cumulant `c_order` is replaced by `value` while
    /// the Appell polynomials themselves are unchanged.
    pub fn with_corrupted_cumulant(&self, order: usize, value: Rat) -> Self {
        Self::build(
            format!("{}[c{order}:={value}]", self.name()),
            Source::Corrupted {
                base: self.clone(),
                order,
                value,
            },
        )
    }

    /// `c_k` for `k ≥ 1`.
    pub fn cumulant(&self, k: usize) -> Result<Rat> {
        assert!(k >= 1, "cumulants are indexed from 1");
        Ok(self.cumulants(k)?[k - 1].clone())
    }

    /// `c_1, …, c_n`.
    pub fn cumulants(&self, n: usize) -> Result<Vec<Rat>> {
        {
            let cache = self.inner.cumulants.lock().expect("cumulant cache poisoned");
            if cache.len() >= n {
                return Ok(cache[..n].to_vec());
            }
        }
        let fresh = self.compute_cumulants(n)?;
        let mut cache = self.inner.cumulants.lock().expect("cumulant cache poisoned");
        if cache.len() < fresh.len() {
            *cache = fresh.clone();
        }
        Ok(fresh)
    }

    /// `z_0, …, z_n`.
    pub fn moments(&self, n: usize) -> Result<Vec<Rat>> {
        {
            let cache = self.inner.moments.lock().expect("moment cache poisoned");
            if cache.len() > n {
                return Ok(cache[..=n].to_vec());
            }
        }
        let fresh = self.compute_moments(n)?;
        let mut cache = self.inner.moments.lock().expect("moment cache poisoned");
        if cache.len() < fresh.len() {
            *cache = fresh.clone();
        }
        Ok(fresh)
    }

    fn compute_cumulants(&self, n: usize) -> Result<Vec<Rat>> {
        let c = match &self.inner.source {
            Source::Cumulants(v) => (0..n)
                .map(|i| v.get(i).cloned().unwrap_or_else(Rat::zero))
                .collect(),
            Source::Laguerre(alpha) => (1..=n)
                .map(|k| {
                    let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
                    sign * factorial_rat(k - 1) * alpha
                })
                .collect(),
            Source::Jacobi(..) | Source::Moments(_) => cumulants_from_moments(&self.moments(n)?)?,
            Source::Dual(base) => base
                .cumulants(n)?
                .into_iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c } else { -c })
                .collect(),
            Source::SecondMoment(base) => base
                .cumulants(n)?
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == 0 {
                        Rat::zero()
                    } else {
                        &c * &c / factorial_rat(i)
                    }
                })
                .collect(),
            Source::Centralized(base) => {
                let mut c = base.cumulants(n)?;
                if let Some(c1) = c.first_mut() {
                    *c1 = Rat::zero();
                }
                c
            }
            Source::Corrupted { base, order, value } => {
                let mut c = base.cumulants(n)?;
                if *order >= 1 && *order <= n {
                    c[order - 1] = value.clone();
                }
                c
            }
        };
        Ok(c)
    }

    fn compute_moments(&self, n: usize) -> Result<Vec<Rat>> {
        match &self.inner.source {
            Source::Jacobi(alpha, beta) => jacobi_moments(alpha, beta, n),
            Source::Moments(v) => Ok((0..=n)
                .map(|i| v.get(i).cloned().unwrap_or_else(Rat::zero))
                .collect()),
            Source::Corrupted { base, .. } => base.moments(n),
            _ => Ok(moments_from_cumulants(&self.cumulants(n)?)),
        }
    }

    /// `A_n(x) = Σ_k C(n,k) z_k x^{n-k}`.
    pub fn appell_poly(&self, n: usize) -> Result<Poly> {
        let z = self.moments(n)?;
        let coeffs = (0..=n)
            .map(|j| binomial(n, j) * &z[n - j])
            .collect();
        Ok(Poly::new(coeffs))
    }

    /// `(α, r)` when `c_r` is the only nonzero cumulant of order `≤ max_order`,
    /// i.e. the sequence agrees with `exp(xt + αt^r)` up to that order.
    pub fn exp_rt_params(&self, max_order: usize) -> Result<Option<(Rat, usize)>> {
        let c = self.cumulants(max_order)?;
        let mut nonzero = c.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some((i, c)), None) => Ok(Some((c / factorial_rat(i + 1), i + 1))),
            _ => Ok(None),
        }
    }

    /// `c_k/(k-1)! ∈ ℤ` for all `k ≤ max_order`.
    pub fn integrality_hypothesis(&self, max_order: usize) -> Result<bool> {
        Ok(self
            .cumulants(max_order)?
            .iter()
            .enumerate()
            .all(|(i, c)| (c / factorial_rat(i)).is_integer()))
    }

    /// All even cumulants of order `≤ max_order` vanish.
    pub fn even_cumulants_vanish(&self, max_order: usize) -> Result<bool> {
        Ok(self
            .cumulants(max_order)?
            .iter()
            .skip(1)
            .step_by(2)
            .all(Zero::is_zero))
    }
}

impl fmt::Debug for AppellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("AppellSpec").field(&self.name()).finish()
    }
}

impl fmt::Display for AppellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AppellSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Parses the sequence grammar: `monomial`, `hermite`, `yablonskii`,
/// `exp-rt:α,r`, `shifted-monomial:α`, `laguerre:α`, `jacobi:α,β`,
/// `cumulants:c1,c2,...` and `moments:1,z1,z2,...`.
pub fn parse_spec(s: &str) -> Result<AppellSpec> {
    let s = s.trim();
    let (head, args) = match s.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a)),
        None => (s, None),
    };
    let list = |a: Option<&str>| -> Result<Vec<Rat>> {
        let a = a.ok_or_else(|| Error::Parse(format!("{head} needs parameters")))?;
        if a.trim().is_empty() {
            return Ok(Vec::new());
        }
        a.split(',').map(parse_rat).collect()
    };
    let exactly = |v: Vec<Rat>, n: usize| -> Result<Vec<Rat>> {
        if v.len() == n {
            Ok(v)
        } else {
            Err(Error::Parse(format!("{head} takes {n} parameter(s), got {}", v.len())))
        }
    };
    let no_args = |spec: AppellSpec| -> Result<AppellSpec> {
        match args {
            None => Ok(spec),
            Some(_) => Err(Error::Parse(format!("{head} takes no parameters"))),
        }
    };
    match head {
        "monomial" => no_args(AppellSpec::monomial()),
        "hermite" => no_args(AppellSpec::hermite()),
        "yablonskii" | "yablonskii-vorobiev" => no_args(AppellSpec::yablonskii_vorobiev()),
        "exp-rt" => {
            let v = exactly(list(args)?, 2)?;
            let r = &v[1];
            if !r.is_integer() || !r.is_positive() {
                return Err(Error::Parse(format!("exp-rt exponent must be a positive integer, got {r}")));
            }
            let r: usize = r
                .to_integer()
                .try_into()
                .map_err(|_| Error::Parse("exp-rt exponent too large".into()))?;
            AppellSpec::exp_rt(v[0].clone(), r)
        }
        "shifted-monomial" => {
            let v = exactly(list(args)?, 1)?;
            Ok(AppellSpec::shifted_monomial(v[0].clone()))
        }
        "laguerre" => {
            let v = exactly(list(args)?, 1)?;
            Ok(AppellSpec::laguerre(v[0].clone()))
        }
        "jacobi" => {
            let v = exactly(list(args)?, 2)?;
            Ok(AppellSpec::jacobi(v[0].clone(), v[1].clone()))
        }
        "cumulants" => Ok(AppellSpec::from_cumulants(list(args)?)),
        "moments" => AppellSpec::from_moments(list(args)?),
        other => Err(Error::Parse(format!("unknown sequence {other:?}"))),
    }
}

/// `z_0, …, z_n` from `c_1, …, c_n` via
/// `z_n = c_n + Σ_{i=1}^{n-1} C(n-1, i) c_{n-i} z_i`.
pub fn moments_from_cumulants(cumulants: &[Rat]) -> Vec<Rat> {
    let n = cumulants.len();
    let mut z = Vec::with_capacity(n + 1);
    z.push(Rat::one());
    for m in 1..=n {
        let mut acc = cumulants[m - 1].clone();
        for i in 1..m {
            acc += binomial(m - 1, i) * &cumulants[m - i - 1] * &z[i];
        }
        z.push(acc);
    }
    z
}

/// Inverse of [`moments_from_cumulants`]; `z_0` must be 1.
pub fn cumulants_from_moments(moments: &[Rat]) -> Result<Vec<Rat>> {
    match moments.first() {
        Some(z0) if z0.is_one() => {}
        Some(z0) => return Err(Error::NotAppellMoments(z0.to_string())),
        None => return Err(Error::NotAppellMoments("missing".into())),
    }
    let n = moments.len() - 1;
    let mut c: Vec<Rat> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = moments[m].clone();
        for i in 1..m {
            acc -= binomial(m - 1, i) * &c[m - i - 1] * &moments[i];
        }
        c.push(acc);
    }
    Ok(c)
}

fn jacobi_moments(alpha: &Rat, beta: &Rat, n: usize) -> Result<Vec<Rat>> {
    let a = -alpha;
    let s = -(alpha + beta);
    let mut z = Vec::with_capacity(n + 1);
    z.push(Rat::one());
    let (mut num, mut den) = (Rat::one(), Rat::one());
    for k in 1..=n {
        let i = rat(k as i64 - 1);
        num *= rat(2) * (&a + &i);
        den *= &s + &i;
        if den.is_zero() {
            return Err(Error::DegenerateJacobi {
                sum: (alpha + beta).to_string(),
                order: k,
            });
        }
        z.push(&num / &den);
    }
    Ok(z)
}
