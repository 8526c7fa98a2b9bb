//! Plancherel statistics of `A_λ` over `λ ⊢ n`, where `λ` has probability
//! `F_λ²/n!`.
//!
//! Every statistic is computed twice: by summing over all partitions of `n`
//! and from its closed form. A mismatch is reported as an error rather than
//! silently preferring either side.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::appell::AppellSpec;
use crate::cyclotomic::{is_rational, CyclotomicField};
use crate::error::{Error, Result};
use crate::exactpoly::{big_rat, factorial_rat, Poly, Rat};
use crate::partition::{partitions_of, Partition};
use crate::wapoly::WapEngine;

/// `Σ_{λ⊢n} F_λ² f(A_λ)`, before division by `n!`.
fn weighted_sum(
    engine: &WapEngine,
    n: usize,
    f: impl Fn(Poly) -> Poly + Sync,
) -> Result<Poly> {
    let parts: Vec<Partition> = partitions_of(n);
    let terms = parts
        .par_iter()
        .map(|lambda| {
            let w = big_rat(BigInt::from(lambda.syt_count()).pow(2));
            Ok(f(engine.get(lambda)?).scale(&w))
        })
        .collect::<Result<Vec<Poly>>>()?;
    let sum = terms.iter().fold(Poly::zero(), |acc, t| &acc + t);
    sum.exact_div_scalar(&factorial_rat(n))
}

fn violation(identity: &'static str, n: usize, brute: &Poly, closed: &Poly) -> Error {
    Error::TheoremViolation {
        identity,
        detail: format!("n = {n}: sum over partitions gives {brute}, closed form gives {closed}"),
    }
}

pub fn mean_brute_force(engine: &WapEngine, n: usize) -> Result<Poly> {
    weighted_sum(engine, n, |a| a)
}

pub fn second_moment_brute_force(engine: &WapEngine, n: usize) -> Result<Poly> {
    weighted_sum(engine, n, |a| &a * &a)
}

/// `A_1^n`
pub fn mean_closed_form(spec: &AppellSpec, n: usize) -> Result<Poly> {
    Ok(spec.appell_poly(1)?.pow(n))
}

/// `B_n((x + c_1)²)` where `B` has cumulants `0, c_2²/1!, c_3²/2!, …`.
pub fn second_moment_closed_form(spec: &AppellSpec, n: usize) -> Result<Poly> {
    let c1 = spec.cumulant(1)?;
    Ok(spec
        .second_moment_spec()
        .appell_poly(n)?
        .eval_at_square_shift(&c1))
}

/// Mean of `A_λ`; errors unless brute force and closed form agree.
pub fn mean(engine: &WapEngine, n: usize) -> Result<Poly> {
    let brute = mean_brute_force(engine, n)?;
    let closed = mean_closed_form(engine.spec(), n)?;
    if brute != closed {
        return Err(violation("plancherel-mean", n, &brute, &closed));
    }
    Ok(brute)
}

/// Second moment of `A_λ`; errors unless brute force and closed form agree.
pub fn second_moment(engine: &WapEngine, n: usize) -> Result<Poly> {
    let brute = second_moment_brute_force(engine, n)?;
    let closed = second_moment_closed_form(engine.spec(), n)?;
    if brute != closed {
        return Err(violation("plancherel-second-moment", n, &brute, &closed));
    }
    Ok(brute)
}

/// True when `deg v ≤ 2n − 4`; the zero polynomial always qualifies and
/// no nonzero variance qualifies below `n = 2`.
pub fn variance_bound_holds(variance: &Poly, n: usize) -> bool {
    match variance.degree() {
        None => true,
        Some(d) => n >= 2 && d + 4 <= 2 * n,
    }
}

/// `Var = E[A_λ²] − E[A_λ]²` with its degree-bound flag.
pub fn variance(engine: &WapEngine, n: usize) -> Result<(Poly, bool)> {
    let m = mean(engine, n)?;
    let v = &second_moment(engine, n)? - &(&m * &m);
    let ok = variance_bound_holds(&v, n);
    Ok((v, ok))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlancherelReport {
    pub n: usize,
    pub mean: Poly,
    pub second_moment: Poly,
    pub variance: Poly,
    pub variance_degree_bound_ok: bool,
}

pub fn report(engine: &WapEngine, n: usize) -> Result<PlancherelReport> {
    let mean = mean(engine, n)?;
    let second_moment = second_moment(engine, n)?;
    let variance = &second_moment - &(&mean * &mean);
    Ok(PlancherelReport {
        n,
        variance_degree_bound_ok: variance_bound_holds(&variance, n),
        mean,
        second_moment,
        variance,
    })
}

/// `E[A_λ²] = i^{−n} He_n(i x²)` for the Hermite sequence, evaluated in `ℚ(i)`.
pub fn hermite_second_moment_check(n: usize) -> Result<bool> {
    let engine = WapEngine::new(AppellSpec::hermite());
    let brute = second_moment_brute_force(&engine, n)?;
    let field = CyclotomicField::new(4);
    let he = AppellSpec::hermite().appell_poly(n)?;
    let scaled = field.substitute_scaled(&he, &field.zeta_pow(1));
    let coeffs = field.scale_all(&scaled, &field.zeta_pow(-(n as i64)));
    let mut in_y = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let r = c.coeff(0);
        if !is_rational(c, &r) {
            return Ok(false);
        }
        in_y.push(r);
    }
    let closed = Poly::new(in_y).compose(&Poly::monomial(Rat::one(), 2));
    Ok(brute == closed)
}

/// `E[A_λ²] = appell(exp_rt(rα², r), n)(x²)` for the sequence `exp_rt(α, r)`.
pub fn exp_rt_second_moment_check(alpha: &Rat, r: usize, n: usize) -> Result<bool> {
    let engine = WapEngine::new(AppellSpec::exp_rt(alpha.clone(), r)?);
    let b = AppellSpec::exp_rt(alpha * alpha * Rat::from_integer(r.into()), r)?;
    let closed = b.appell_poly(n)?.compose(&Poly::monomial(Rat::one(), 2));
    Ok(second_moment_brute_force(&engine, n)? == closed)
}

/// `E[(l^{(α)}_λ)²] = (−1)^n l_n^{(−α²)}(−x² − 2αx)`.
pub fn laguerre_second_moment_check(alpha: &Rat, n: usize) -> Result<bool> {
    let engine = WapEngine::new(AppellSpec::laguerre(alpha.clone()));
    let brute = second_moment_brute_force(&engine, n)?;
    let inner = Poly::new(vec![Rat::zero(), -(alpha * Rat::from_integer(2.into())), -Rat::one()]);
    let mut closed = AppellSpec::laguerre(-(alpha * alpha))
        .appell_poly(n)?
        .compose(&inner);
    if n % 2 == 1 {
        closed = -closed;
    }
    Ok(brute == closed)
}
