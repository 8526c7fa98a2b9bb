//! Exact arithmetic in the cyclotomic field `ℚ(ζ_m)`.
//!
//! Field elements are polynomials in `ζ` reduced modulo the cyclotomic
//! polynomial `Φ_m`, so equality of reduced forms is equality in the field.
//! Polynomials in `x` over the field are coefficient vectors of elements.

use num_traits::{One, Zero};

use crate::exactpoly::{Poly, Rat};

#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: usize,
    modulus: Poly,
}

/// `Φ_m` via `x^m - 1 = ∏_{d | m} Φ_d`.
pub fn cyclotomic_polynomial(m: usize) -> Poly {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut num = Poly::monomial(Rat::one(), m);
    num -= &Poly::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = num
            .div_rem(&cyclotomic_polynomial(d))
            .expect("cyclotomic polynomials are nonzero");
        debug_assert!(r.is_zero());
        num = q;
    }
    num
}

impl CyclotomicField {
    pub fn new(order: usize) -> Self {
        CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `[ℚ(ζ_m) : ℚ] = φ(m)`
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.div_rem(&self.modulus).expect("modulus is nonzero").1
    }

    pub fn embed(&self, c: &Rat) -> Poly {
        Poly::constant(c.clone())
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Poly {
        let m = self.order as i64;
        let e = k.rem_euclid(m) as usize;
        self.reduce(&Poly::monomial(Rat::one(), e))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, a: &Poly, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| self.mul(&acc, a))
    }

    /// Coefficients of `p(s·x)` for a field element `s`.
    pub fn substitute_scaled(&self, p: &Poly, s: &Poly) -> Vec<Poly> {
        let mut power = Poly::one();
        let mut out = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            out.push(self.reduce(&power.scale(c)));
            power = self.mul(&power, s);
        }
        trim(out)
    }

    /// Multiplies every coefficient of a field-valued polynomial by `c`.
    pub fn scale_all(&self, coeffs: &[Poly], c: &Poly) -> Vec<Poly> {
        trim(coeffs.iter().map(|a| self.mul(a, c)).collect())
    }

    /// A rational polynomial viewed over the field.
    pub fn lift(&self, p: &Poly) -> Vec<Poly> {
        p.coeffs().iter().map(|c| self.embed(c)).collect()
    }
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
    v
}

/// True when the element is the rational number `c`.
pub fn is_rational(element: &Poly, c: &Rat) -> bool {
    match element.degree() {
        None => c.is_zero(),
        Some(0) => &element.coeff(0) == c,
        Some(_) => false,
    }
}
