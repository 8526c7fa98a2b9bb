//! The ring `Λ_ℚ` of symmetric functions, held in the power-sum basis.
//!
//! Every element is a finite `ℚ`-combination of `p_μ = p_{μ_1} ⋯ p_{μ_r}`.
//! Complete, elementary and Schur functions are constructors that expand
//! into this basis; `φ_A` is evaluated by substituting the images of the
//! power sums.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::appell::AppellSpec;
use crate::det::{determinant, RingElem};
use crate::error::{Error, Result};
use crate::exactpoly::{big_rat, factorial_rat, rat, Poly, Rat};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PSym {
    terms: BTreeMap<Partition, Rat>,
}

impl PSym {
    pub fn zero() -> Self {
        PSym::default()
    }

    pub fn one() -> Self {
        PSym::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PSym::monomial(Partition::empty(), c)
    }

    /// `c·p_μ`
    pub fn monomial(mu: Partition, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        PSym { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.terms.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mu: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> PSym {
        if c.is_zero() {
            return PSym::zero();
        }
        PSym {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// True when all terms have the same degree (the zero element counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    /// `ω(p_μ) = ∏ (-1)^{μ_i - 1} p_μ`, i.e. the sign `(-1)^{|μ| - ℓ(μ)}`.
    pub fn omega(&self) -> PSym {
        PSym {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let odd = (mu.size() - mu.length()) % 2 == 1;
                    (mu.clone(), if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Formal partial derivative `∂/∂p_1`.
    pub fn d_dp1(&self) -> PSym {
        let mut out = PSym::zero();
        for (mu, c) in &self.terms {
            let ones = mu.parts().iter().filter(|&&p| p == 1).count();
            if ones == 0 {
                continue;
            }
            let mut parts = mu.parts().to_vec();
            parts.pop();
            out.add_term(Partition::from_unsorted(parts), c * rat(ones as i64));
        }
        out
    }
}

fn merge_desc(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Add for &PSym {
    type Output = PSym;
    fn add(self, rhs: &PSym) -> PSym {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &PSym {
    type Output = PSym;
    fn sub(self, rhs: &PSym) -> PSym {
        self + &(-rhs)
    }
}

impl Neg for &PSym {
    type Output = PSym;
    fn neg(self) -> PSym {
        PSym {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul for &PSym {
    type Output = PSym;
    fn mul(self, rhs: &PSym) -> PSym {
        let mut out = PSym::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let key = Partition::from_unsorted(merge_desc(a.parts(), b.parts()));
                out.add_term(key, x * y);
            }
        }
        out
    }
}

impl RingElem for PSym {
    fn zero() -> Self {
        PSym::zero()
    }
    fn one() -> Self {
        PSym::one()
    }
    fn is_zero(&self) -> bool {
        PSym::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl fmt::Display for PSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*p{mu}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    partition: &'a Partition,
    coefficient: String,
}

impl Serialize for PSym {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord<'_>> = self
            .terms
            .iter()
            .map(|(partition, c)| TermRecord {
                partition,
                coefficient: c.to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

/// `z_μ = ∏_i i^{m_i} m_i!` where `m_i` counts parts equal to `i`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut run = 0usize;
    let parts = mu.parts();
    for (idx, &p) in parts.iter().enumerate() {
        run += 1;
        acc *= BigInt::from(p);
        acc *= BigInt::from(run);
        if idx + 1 == parts.len() || parts[idx + 1] != p {
            run = 0;
        }
    }
    acc
}

/// `p_m` for `m ≥ 1`.
pub fn p_gen(m: usize) -> Result<PSym> {
    if m == 0 {
        return Err(Error::PowerSumZero);
    }
    Ok(PSym::monomial(Partition::row(m), Rat::one()))
}

/// `h_m = Σ_{μ ⊢ m} p_μ / z_μ`, the degree-`m` part of `exp(Σ p_k t^k / k)`.
/// Negative `m` gives zero.
pub fn h_gen(m: i64) -> PSym {
    if m < 0 {
        return PSym::zero();
    }
    let mut out = PSym::zero();
    for mu in partitions_of(m as usize) {
        let c = Rat::new(BigInt::one(), z_mu(&mu));
        out.add_term(mu, c);
    }
    out
}

/// `e_m = Σ_{μ ⊢ m} (-1)^{m - ℓ(μ)} p_μ / z_μ`. Negative `m` gives zero.
pub fn e_gen(m: i64) -> PSym {
    if m < 0 {
        return PSym::zero();
    }
    let mut out = PSym::zero();
    for mu in partitions_of(m as usize) {
        let sign = if (mu.size() - mu.length()) % 2 == 0 { 1 } else { -1 };
        let c = Rat::new(BigInt::from(sign), z_mu(&mu));
        out.add_term(mu, c);
    }
    out
}

fn jacobi_trudi(lambda: &Partition, entry: impl Fn(i64) -> PSym) -> PSym {
    let r = lambda.length();
    let mut cache: HashMap<i64, PSym> = HashMap::new();
    let matrix: Vec<Vec<PSym>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    let m = lambda.part(i) as i64 - i as i64 + j as i64;
                    cache.entry(m).or_insert_with(|| entry(m)).clone()
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

fn schur_cache() -> &'static Mutex<HashMap<Partition, PSym>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, PSym>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `s_λ = det[h_{λ_i - i + j}]`, memoised per `λ`.
pub fn schur(lambda: &Partition) -> PSym {
    if let Some(s) = schur_cache().lock().expect("schur cache poisoned").get(lambda) {
        return s.clone();
    }
    let s = jacobi_trudi(lambda, h_gen);
    schur_cache()
        .lock()
        .expect("schur cache poisoned")
        .entry(lambda.clone())
        .or_insert(s)
        .clone()
}

/// `det[e_{λ_i - i + j}]`, which equals `s_{λ'}`.
pub fn dual_jacobi_trudi(lambda: &Partition) -> PSym {
    jacobi_trudi(lambda, e_gen)
}

/// `p_k s_λ = Σ_{γ/λ rim hook of size k} (-1)^{ht} s_γ`, as `(γ, sign)` pairs.
pub fn mn_multiply_p(k: usize, lambda: &Partition) -> Vec<(Partition, i64)> {
    lambda
        .rim_hooks_up(k)
        .into_iter()
        .map(|h| {
            let sign = h.sign();
            (h.outer, sign)
        })
        .collect()
}

/// `Σ c_γ s_γ` expanded in the power-sum basis.
pub fn schur_combination(terms: &[(Partition, i64)]) -> PSym {
    terms.iter().fold(PSym::zero(), |acc, (gamma, c)| {
        &acc + &schur(gamma).scale(&rat(*c))
    })
}

/// Integer coefficients `d_{λμ}` of `H(λ)·s_λ = Σ_μ d_{λμ} p_μ`.
pub fn augmented_schur_p_integral(lambda: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    let h = big_rat(BigInt::from(lambda.hook_product()));
    schur(lambda)
        .scale(&h)
        .terms
        .into_iter()
        .map(|(mu, c)| {
            if c.is_integer() {
                Ok((mu, c.to_integer()))
            } else {
                Err(Error::NonIntegerCoefficient {
                    partition: mu.to_string(),
                    coefficient: c.to_string(),
                })
            }
        })
        .collect()
}

/// `φ_A(f)` with `φ_A(p_1) = x + c_1` and `φ_A(p_k) = c_k/(k-1)!` for `k ≥ 2`.
pub fn phi_apply(spec: &AppellSpec, f: &PSym) -> Result<Poly> {
    let max_part = f.terms.keys().map(|mu| mu.part(1)).max().unwrap_or(0);
    let max_ones = f
        .terms
        .keys()
        .map(|mu| mu.parts().iter().filter(|&&p| p == 1).count())
        .max()
        .unwrap_or(0);
    let c = spec.cumulants(max_part.max(1))?;
    let scalar: Vec<Rat> = (1..=max_part)
        .map(|k| &c[k - 1] / factorial_rat(k - 1))
        .collect();
    let p1 = Poly::linear(c[0].clone());
    let mut powers = vec![Poly::one()];
    for i in 1..=max_ones {
        powers.push(&powers[i - 1] * &p1);
    }
    let mut out = Poly::zero();
    for (mu, coeff) in &f.terms {
        let mut ones = 0;
        let mut k = coeff.clone();
        for &p in mu.parts() {
            if p == 1 {
                ones += 1;
            } else {
                k *= &scalar[p - 1];
            }
        }
        if !k.is_zero() {
            out += &powers[ones].scale(&k);
        }
    }
    Ok(out)
}

/// Both sides of `n s_λ = Σ_k Σ_{λ/μ rim hook of size k} (-1)^{ht} p_k s_μ`.
pub fn schur_newton_lhs_rhs(lambda: &Partition) -> (PSym, PSym) {
    let n = lambda.size();
    let lhs = schur(lambda).scale(&rat(n as i64));
    let mut rhs = PSym::zero();
    for k in 1..=n {
        let pk = p_gen(k).expect("k >= 1");
        for hook in lambda.rim_hooks_down(k) {
            let term = (&pk * &schur(&hook.inner)).scale(&rat(hook.sign()));
            rhs = &rhs + &term;
        }
    }
    (lhs, rhs)
}

/// `[t^n] exp(Σ_k p_k² t^k / k) = Σ_{μ ⊢ n} p_μ² / z_μ`.
pub fn cauchy_diagonal(n: usize) -> PSym {
    let mut out = PSym::zero();
    for mu in partitions_of(n) {
        let key = Partition::from_unsorted(merge_desc(mu.parts(), mu.parts()));
        out.add_term(key, Rat::new(BigInt::one(), z_mu(&mu)));
    }
    out
}
