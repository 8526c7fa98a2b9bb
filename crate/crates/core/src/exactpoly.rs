//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::det::{determinant, RingElem};
use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always in lowest terms.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn big_rat(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// Parses `p/q` or an integer. Decimal and irrational forms are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Binomial coefficient as an exact rational; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rat::from_integer(acc)
}

pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(BigInt::from(crate::partition::factorial(n)))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    /// `coeffs[i]` multiplies `x^i`; never ends in a zero.
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// `c·x^k`
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x + a`
    pub fn linear(a: Rat) -> Self {
        Poly::new(vec![a, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// `k`-th formal derivative.
    pub fn derivative(&self, k: usize) -> Poly {
        if k >= self.coeffs.len() {
            return Poly::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| {
                let falling: BigInt = (i - k + 1..=i).map(BigInt::from).product();
                &self.coeffs[i] * Rat::from_integer(falling)
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn exact_div_scalar(&self, c: &Rat) -> Result<Poly> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(&c.recip()))
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(x + a)`
    pub fn shift(&self, a: &Rat) -> Poly {
        self.compose(&Poly::linear(a.clone()))
    }

    /// `p((x + a)²)`
    pub fn eval_at_square_shift(&self, a: &Rat) -> Poly {
        self.compose(&Poly::linear(a.clone()).pow(2))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integer_poly(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Coefficients as strings, lowest degree first: `"n"` or `"num/den"`.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
        items
            .iter()
            .map(|s| parse_rat(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, b) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn to_latex(&self) -> String {
        render(self, true)
    }
}

/// `det[p_j^{(i)}]`, the Wronskian of `polys`. An empty list gives `1`.
pub fn wronskian(polys: &[Poly]) -> Poly {
    let r = polys.len();
    let matrix: Vec<Vec<Poly>> = (0..r)
        .map(|i| polys.iter().map(|p| p.derivative(i)).collect())
        .collect();
    determinant(&matrix)
}

fn render(p: &Poly, latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        let coeff = if latex && !mag.is_integer() {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        } else {
            mag.to_string()
        };
        let power = match (k, latex) {
            (0, _) => String::new(),
            (1, _) => "x".to_string(),
            (_, true) => format!("x^{{{k}}}"),
            (_, false) => format!("x^{k}"),
        };
        match (k, mag.is_one()) {
            (0, _) => out.push_str(&coeff),
            (_, true) => out.push_str(&power),
            (_, false) if latex => {
                out.push_str(&coeff);
                out.push(' ');
                out.push_str(&power);
            }
            (_, false) => {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&power);
            }
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Poly::from_coeff_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self += &(-rhs);
    }
}

impl RingElem for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
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

/// Exact `num / den` for integers, or `None` when `den` does not divide `num`.
pub fn exact_int_div(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 0..6)
            .prop_map(|v| Poly::new(v.into_iter().map(|(a, b)| ratio(a, b)).collect()))
    }

    #[test]
    fn derivative_examples() {
        let p = Poly::from_ints(&[0, -3, 0, 1]);
        assert_eq!(p.derivative(1), Poly::from_ints(&[-3, 0, 3]));
        assert_eq!(Poly::from_ints(&[5]).derivative(1), Poly::zero());
        assert_eq!(Poly::from_ints(&[0, 0, 1]).derivative(3), Poly::zero());
        assert_eq!(p.derivative(0), p);
    }

    #[test]
    fn wronskian_examples() {
        let x = Poly::x();
        let he3 = Poly::from_ints(&[0, -3, 0, 1]);
        assert_eq!(wronskian(&[x.clone(), he3]), Poly::from_ints(&[0, 0, 0, 2]));
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(wronskian(std::slice::from_ref(&p)), p);
        assert_eq!(wronskian(&[Poly::one(), x]), Poly::one());
    }

    #[test]
    fn scalar_division() {
        let p = Poly::from_ints(&[0, 0, 0, 2]);
        assert_eq!(p.exact_div_scalar(&rat(2)).unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(Poly::zero().exact_div_scalar(&rat(3)).unwrap(), Poly::zero());
        let q = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(q.exact_div_scalar(&rat(1)).unwrap(), q);
        assert_eq!(q.exact_div_scalar(&rat(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitutions() {
        let p = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(p.eval_at_square_shift(&rat(0)), Poly::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(p.shift(&rat(0)), p);
        assert_eq!(Poly::x().shift(&ratio(2, 3)), Poly::new(vec![ratio(2, 3), rat(1)]));
        assert_eq!(
            Poly::x().eval_at_square_shift(&rat(1)),
            Poly::from_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn euclidean_division() {
        let p = Poly::from_ints(&[-1, 0, 0, 1]);
        let (q, r) = p.div_rem(&Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = Poly::from_ints(&[1, 0, 1]).div_rem(&Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(q, Poly::new(vec![rat(0), ratio(1, 2)]));
        assert_eq!(r, Poly::one());
        assert!(p.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn integrality() {
        assert!(Poly::from_ints(&[-1, 0, 1]).is_integer_poly());
        assert!(!Poly::monomial(ratio(1, 2), 1).is_integer_poly());
        assert!(Poly::zero().is_integer_poly());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::new(vec![rat(1), rat(0), rat(0)]).degree(), Some(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(Poly::from_ints(&[0, 0, 0, 1]).to_string(), "x^3");
        assert_eq!(Poly::from_ints(&[2, 1]).to_string(), "x + 2");
        assert_eq!(Poly::from_ints(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(Poly::from_ints(&[0, -3, 0, -1]).to_string(), "-x^3 - 3*x");
        assert_eq!(Poly::new(vec![ratio(1, 2), ratio(-3, 2)]).to_string(), "-3/2*x + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(
            Poly::new(vec![ratio(1, 2), rat(0), rat(3)]).to_latex(),
            "3 x^{2} + \\frac{1}{2}"
        );
        assert_eq!(
            serde_json::to_string(&Poly::new(vec![ratio(-1, 3), rat(2)])).unwrap(),
            r#"["-1/3","2"]"#
        );
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("-4/3").unwrap(), ratio(-4, 3));
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert_eq!(parse_rat("2/4").unwrap(), ratio(1, 2));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("pi").is_err());
        assert_eq!(parse_rat("1/0"), Err(Error::DivisionByZero));
    }

    proptest! {
        #[test]
        fn json_round_trip(p in poly_strategy()) {
            let s = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
        }

        #[test]
        fn leibniz_rule(p in poly_strategy(), q in poly_strategy()) {
            let lhs = (&p * &q).derivative(1);
            let rhs = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wronskian_alternating(ps in proptest::collection::vec(poly_strategy(), 2..4), i in 0usize..4, j in 0usize..4) {
            let (i, j) = (i % ps.len(), j % ps.len());
            let w = wronskian(&ps);
            let mut swapped = ps.clone();
            swapped.swap(i, j);
            if i == j {
                prop_assert_eq!(wronskian(&swapped), w);
            } else {
                prop_assert_eq!(wronskian(&swapped), -&w);
                let mut repeated = ps.clone();
                repeated[j] = repeated[i].clone();
                prop_assert!(wronskian(&repeated).is_zero());
            }
        }

        #[test]
        fn wronskian_multilinear(ps in proptest::collection::vec(poly_strategy(), 2..4), extra in poly_strategy(), c in -3i64..=3) {
            let mut summed = ps.clone();
            summed[0] = &ps[0].scale(&rat(c)) + &extra;
            let mut other = ps.clone();
            other[0] = extra.clone();
            let lhs = wronskian(&summed);
            let rhs = &wronskian(&ps).scale(&rat(c)) + &wronskian(&other);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wronskian_of_monic_distinct_degrees(mut degs in proptest::collection::btree_set(0usize..7, 1..5), seed in poly_strategy()) {
            let degs: Vec<usize> = std::mem::take(&mut degs).into_iter().collect();
            // monic polynomials with arbitrary lower-order terms
            let ps: Vec<Poly> = degs
                .iter()
                .map(|&d| {
                    let mut lower = Poly::new(seed.coeffs().iter().take(d).cloned().collect());
                    lower += &Poly::monomial(rat(1), d);
                    lower
                })
                .collect();
            let w = wronskian(&ps);
            let r = degs.len();
            let expected_degree = degs.iter().sum::<usize>() - r * (r - 1) / 2;
            let signed: Vec<i64> = degs.iter().map(|&d| d as i64).collect();
            prop_assert_eq!(w.degree(), Some(expected_degree));
            prop_assert_eq!(w.leading_coeff().cloned(), Some(big_rat(crate::partition::vandermonde(&signed))));
        }
    }
}
