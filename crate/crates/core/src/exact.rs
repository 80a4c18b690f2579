//! Exact arithmetic: big rationals, dense univariate polynomials, Laurent
//! polynomials in `y`, and polynomials in `z` with Laurent coefficients.
//!
//! Every value here is kept in canonical form (no stored zero coefficients,
//! no trailing zeros), so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

fn pow_rational(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Renders a coefficient in front of a variable part. Unit coefficients are
/// elided unless the term is a constant.
fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &Rational, var: &str) -> fmt::Result {
    let negative = coeff.is_negative();
    let abs = coeff.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if var.is_empty() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        if abs.is_integer() {
            write!(f, "{abs}")?;
        } else {
            write!(f, "({abs})")?;
        }
    }
    f.write_str(var)
}

/// Dense polynomial in one variable with rational coefficients; index `k`
/// holds the coefficient of the `k`-th power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: Rational) -> Self {
        Poly::new(vec![-root, Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// True when `x^n p(1/x) = p(x)`, i.e. the coefficient list read over the
    /// window `0..=n` is a palindrome.
    pub fn is_palindromic(&self, n: usize) -> bool {
        if self.degree().is_some_and(|d| d > n) {
            return false;
        }
        (0..=n).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    /// Reinterprets the polynomial as a Laurent polynomial in `y`.
    pub fn to_laurent(&self) -> LaurentPolyY {
        LaurentPolyY::from_terms(self.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c.clone())))
    }

    pub fn display(&self, var: &str) -> PolyDisplay<'_> {
        PolyDisplay {
            poly: self,
            var: var.to_string(),
        }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, k),
            };
            write_term(f, first, c, &var)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("z").fmt(f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Unique polynomial of degree at most `degree_bound` through the given
/// samples, by exact Lagrange interpolation.
pub fn interpolate_univariate(samples: &[(i64, Rational)], degree_bound: usize) -> Result<Poly> {
    if samples.len() != degree_bound + 1 {
        return Err(Error::ArityMismatch {
            expected: degree_bound + 1,
            got: samples.len(),
        });
    }
    for (i, (xi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateNode(*xi));
        }
    }
    let mut result = Poly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Poly::linear_root(int(*xj));
            denom *= int(xi - xj);
        }
        result = &result + &basis.scale(&(yi / denom));
    }
    Ok(result)
}

/// Laurent polynomial in `y` with rational coefficients. The map never stores
/// a zero coefficient; the empty map is the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolyY {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolyY {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_terms([(exp, c)])
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        LaurentPolyY { terms: map }
    }

    pub fn from_integers(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    /// `(c + y)^d`-style binomial powers are common enough to have a helper:
    /// returns `(a + b*y)^d`.
    pub fn binomial_power(a: i64, b: i64, d: u32) -> Self {
        let base = Self::from_integers(&[(0, a), (1, b)]);
        base.pow(d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `y -> 1/y`. An involution.
    pub fn substitute_reciprocal(&self) -> Self {
        LaurentPolyY {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_neg().expect("Laurent exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `y -> -y`.
    pub fn substitute_negated(&self) -> Self {
        LaurentPolyY {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e % 2 != 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: i64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| e.checked_add(k).map(|e| (e, c.clone())).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(LaurentPolyY { terms })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e = ea.checked_add(*eb).ok_or(Error::ExponentOverflow)?;
                *out.entry(e).or_insert_with(Rational::zero) += a * b;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(LaurentPolyY { terms: out })
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    /// Evaluates at a nonzero rational `y`.
    pub fn eval(&self, y: &Rational) -> Rational {
        assert!(!y.is_zero() || self.min_exponent().unwrap_or(0) >= 0, "pole at y = 0");
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let p = if *e >= 0 {
                pow_rational(y, *e as u32)
            } else {
                pow_rational(&y.recip(), e.unsigned_abs() as u32)
            };
            acc + c * p
        })
    }

    /// True when the polynomial has only nonnegative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// Converts to a dense polynomial, if there are no negative exponents.
    pub fn to_poly(&self) -> Option<Poly> {
        if !self.is_polynomial() {
            return None;
        }
        let len = self.max_exponent().map_or(0, |e| e as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Some(Poly::new(coeffs))
    }
}

impl fmt::Display for LaurentPolyY {
    /// Ascending exponents; negative powers print as `y^{-k}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let var = match *e {
                0 => String::new(),
                1 => "y".to_string(),
                e if e < 0 => format!("y^{{{e}}}"),
                e => format!("y^{e}"),
            };
            write_term(f, i == 0, c, &var)?;
        }
        Ok(())
    }
}

impl Add for &LaurentPolyY {
    type Output = LaurentPolyY;
    fn add(self, rhs: &LaurentPolyY) -> LaurentPolyY {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPolyY> for LaurentPolyY {
    fn add_assign(&mut self, rhs: &LaurentPolyY) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl Neg for &LaurentPolyY {
    type Output = LaurentPolyY;
    fn neg(self) -> LaurentPolyY {
        LaurentPolyY {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolyY {
    type Output = LaurentPolyY;
    fn sub(self, rhs: &LaurentPolyY) -> LaurentPolyY {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolyY {
    type Output = LaurentPolyY;
    /// Panics on exponent overflow; use [`LaurentPolyY::checked_mul`] to get
    /// an error instead.
    fn mul(self, rhs: &LaurentPolyY) -> LaurentPolyY {
        self.checked_mul(rhs).expect("Laurent exponent overflow")
    }
}

/// Polynomial in `z` whose coefficients are Laurent polynomials in `y`.
/// Index `k` is the coefficient of `z^k`; trailing zeros are stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightedEhrhartPoly {
    coeffs: Vec<LaurentPolyY>,
}

impl WeightedEhrhartPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(mut coeffs: Vec<LaurentPolyY>) -> Self {
        while coeffs.last().is_some_and(LaurentPolyY::is_zero) {
            coeffs.pop();
        }
        WeightedEhrhartPoly { coeffs }
    }

    /// `weight * p(z)`.
    pub fn from_z_poly(p: &Poly, weight: &LaurentPolyY) -> Self {
        Self::new(p.coeffs().iter().map(|c| weight.scale(c)).collect())
    }

    pub fn coeffs(&self) -> &[LaurentPolyY] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentPolyY {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_k coeff_k * z_value^k`; negative `z_value` is allowed.
    pub fn evaluate(&self, z_value: i64) -> LaurentPolyY {
        let z = int(z_value);
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPolyY::zero(), |acc, c| &acc.scale(&z) + c)
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn scale(&self, w: &LaurentPolyY) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * w).collect())
    }

    /// Drops the `y`-dependence when every coefficient is constant.
    pub fn to_z_poly(&self) -> Option<Poly> {
        self.coeffs
            .iter()
            .map(|c| match c.min_exponent() {
                None => Some(Rational::zero()),
                Some(0) if c.max_exponent() == Some(0) => Some(c.coeff(0)),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl Add for &WeightedEhrhartPoly {
    type Output = WeightedEhrhartPoly;
    fn add(self, rhs: &WeightedEhrhartPoly) -> WeightedEhrhartPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        WeightedEhrhartPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl fmt::Display for WeightedEhrhartPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

// Wire format: a Laurent polynomial is a list of [exponent, numerator,
// denominator] triples sorted by exponent. Integers that do not fit in an
// i64 are written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl WireInt {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64()
            .map(WireInt::Small)
            .unwrap_or_else(|| WireInt::Big(n.to_string()))
    }

    fn into_big<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            WireInt::Small(v) => Ok(BigInt::from(v)),
            WireInt::Big(s) => s.parse().map_err(|_| E::custom(format!("bad integer {s:?}"))),
        }
    }
}

impl Serialize for LaurentPolyY {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, WireInt::from_big(c.numer()), WireInt::from_big(c.denom())))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolyY {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, WireInt, WireInt)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, n, d) in raw {
            let d = d.into_big::<D::Error>()?;
            if d.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            terms.push((e, Rational::new(n.into_big::<D::Error>()?, d)));
        }
        Ok(LaurentPolyY::from_terms(terms))
    }
}

impl Serialize for WeightedEhrhartPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightedEhrhartPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<LaurentPolyY>::deserialize(deserializer).map(WeightedEhrhartPoly::new)
    }
}

/// Rationals serialize as a `[numerator, denominator]` pair.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    serde_json::to_value((WireInt::from_big(r.numer()), WireInt::from_big(r.denom())))
        .expect("integers always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolyY {
        LaurentPolyY::from_integers(terms)
    }

    #[test]
    fn interpolation_examples() {
        let line = interpolate_univariate(&[(0, int(1)), (1, int(2))], 1).unwrap();
        assert_eq!(line, Poly::from_integers(&[1, 1]));

        let square = interpolate_univariate(&[(0, int(1)), (1, int(4)), (2, int(9))], 2).unwrap();
        assert_eq!(square, Poly::from_integers(&[1, 2, 1]));

        // Lattice points of the dilated standard triangle at l = 0, 1, 2.
        let tri = interpolate_univariate(&[(0, int(1)), (1, int(3)), (2, int(6))], 2).unwrap();
        assert_eq!(tri, Poly::new(vec![int(1), rat(3, 2), rat(1, 2)]));
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(
            interpolate_univariate(&[(1, int(1)), (1, int(2))], 1),
            Err(Error::DuplicateNode(1))
        );
        assert_eq!(
            interpolate_univariate(&[(1, int(1))], 1),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn reciprocal_substitution() {
        assert_eq!(lp(&[(0, 1), (1, 1)]).substitute_reciprocal(), lp(&[(0, 1), (-1, 1)]));
        assert_eq!(lp(&[(0, 5)]).substitute_reciprocal(), lp(&[(0, 5)]));
        assert_eq!(
            lp(&[(0, 1), (1, -2), (2, 2), (3, -1)]).substitute_reciprocal(),
            lp(&[(0, 1), (-1, -2), (-2, 2), (-3, -1)])
        );
    }

    #[test]
    fn evaluate_examples() {
        let one_plus_y = LaurentPolyY::binomial_power(1, 1, 1);
        // (1+y)(z-1)
        let e = WeightedEhrhartPoly::from_z_poly(&Poly::from_integers(&[-1, 1]), &one_plus_y);
        assert_eq!(e.evaluate(2), one_plus_y);

        // (1+y)^2 (z-1)^2 + 4(1+y)(z-1) + 4
        let zm1 = Poly::from_integers(&[-1, 1]);
        let sq = &WeightedEhrhartPoly::from_z_poly(&zm1.pow(2), &one_plus_y.pow(2))
            + &WeightedEhrhartPoly::from_z_poly(&zm1, &one_plus_y.scale(&int(4)));
        let e = &sq + &WeightedEhrhartPoly::from_z_poly(&Poly::one(), &lp(&[(0, 4)]));
        assert_eq!(e.evaluate(-1), lp(&[(2, 4)]));
        assert_eq!(e.evaluate(0), e.coeff(0));
    }

    #[test]
    fn canonical_forms() {
        assert!(lp(&[(3, 1), (3, -1)]).is_zero());
        assert_eq!(Poly::from_integers(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(
            WeightedEhrhartPoly::new(vec![LaurentPolyY::one(), LaurentPolyY::zero()]).degree(),
            Some(0)
        );
        let a = &rat(1, 3) + &rat(1, 6);
        assert_eq!(a, rat(1, 2));
        assert_eq!(*a.denom(), BigInt::from(2));
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let big = LaurentPolyY::monomial(int(1), i64::MAX);
        assert_eq!(big.checked_mul(&LaurentPolyY::y()), Err(Error::ExponentOverflow));
        assert_eq!(big.shift(1), Err(Error::ExponentOverflow));
    }

    #[test]
    fn rendering() {
        assert_eq!(
            lp(&[(0, 1), (1, -2), (2, 2), (3, -1)]).to_string(),
            "1 - 2y + 2y^2 - y^3"
        );
        assert_eq!(lp(&[(-2, 3), (0, 1)]).to_string(), "3y^{-2} + 1");
        assert_eq!(LaurentPolyY::monomial(rat(-1, 2), 1).to_string(), "-(1/2)y");
        assert_eq!(LaurentPolyY::zero().to_string(), "0");
        assert_eq!(
            Poly::from_integers(&[1, 0, 2, 0, 2, 0, 1]).display("t").to_string(),
            "1 + 2t^2 + 2t^4 + t^6"
        );
    }

    #[test]
    fn wire_format() {
        let p = LaurentPolyY::from_terms([(-1, rat(3, 2)), (2, int(-4))]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[-1,3,2],[2,-4,1]]");
        let back: LaurentPolyY = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);

        let huge = LaurentPolyY::constant(Rational::from_integer(BigInt::from(10).pow(30)));
        let back: LaurentPolyY = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);

        assert!(serde_json::from_str::<LaurentPolyY>("[[0,1,0]]").is_err());
    }

    #[test]
    fn negated_variable() {
        assert_eq!(lp(&[(0, 1), (1, 1)]).substitute_negated(), lp(&[(0, 1), (1, -1)]));
        assert_eq!(
            Poly::from_integers(&[1, 3, 1]).negate_variable(),
            Poly::from_integers(&[1, -3, 1])
        );
    }
}
