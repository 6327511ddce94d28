//! Dense univariate polynomials over exact rationals.
//!
//! A [`Polynomial`] stores its coefficients by exponent, lowest first, with no
//! trailing zeros; the zero polynomial is the empty vector. Besides ring
//! arithmetic this module provides remainders modulo monic polynomials,
//! `n`-simplification (the remainder modulo `x^n - 1`), coefficient class sums
//! and the periodicity predicate.
//!
//! Text format: terms `c*x^k` in ascending `k`, joined by `" + "`, where `c` is
//! a decimal integer or a `p/q` fraction. The zero polynomial is `0`.
//! JSON format: an array of `[numerator, denominator]` decimal-string pairs,
//! one per exponent.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Whether every coefficient is an integer, with the least common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityWitness {
    pub is_integral: bool,
    pub common_denominator: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn x_pow(k: usize) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = -Rational::one();
        coeffs[n] += Rational::one();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_big_ints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Densifies `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_sparse<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `[x^k] self`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^t`.
    pub fn shift(&self, t: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); t];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn integrality(&self) -> IntegralityWitness {
        let common_denominator = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntegralityWitness {
            is_integral: common_denominator.is_one(),
            common_denominator,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Quotient and remainder by any nonzero divisor.
    pub fn div_rem(&self, m: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead = m.leading_coeff().ok_or(Error::DivisionByZero)?;
        let dm = m.len() - 1;
        if self.len() <= dm {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let inv_lead = lead.recip();
        let monic = lead.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dm];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dm];
            if top.is_zero() {
                continue;
            }
            let q = if monic { top.clone() } else { top * &inv_lead };
            for (t, mc) in m.coeffs[..dm].iter().enumerate() {
                if !mc.is_zero() {
                    rem[k + t] -= &q * mc;
                }
            }
            rem[k + dm] = Rational::zero();
            quot[k] = q;
        }
        rem.truncate(dm);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Remainder modulo a monic polynomial of degree at least one.
    pub fn rem(&self, m: &Polynomial) -> Result<Polynomial> {
        match m.leading_coeff() {
            None => return Err(Error::DivisionByZero),
            Some(lead) if !lead.is_one() => return Err(Error::NonMonicModulus(lead.to_string())),
            _ => {}
        }
        if m.len() < 2 {
            return Err(Error::Domain("modulus must have degree at least 1".into()));
        }
        Ok(self.div_rem(m)?.1)
    }

    /// Quotient of a division that must be exact.
    pub fn exact_div(&self, m: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(m)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(r.to_string()));
        }
        Ok(q)
    }

    /// The `n`-simplification: remainder modulo `x^n - 1`, computed by folding
    /// exponents modulo `n`.
    pub fn simplify(&self, n: usize) -> Polynomial {
        assert!(n >= 1, "simplify needs n >= 1");
        if self.len() <= n {
            return self.clone();
        }
        let mut folded = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                folded[k % n] += c;
            }
        }
        Polynomial::from_coeffs(folded)
    }

    /// Sum of the coefficients whose exponent is congruent to `i` modulo `n`.
    pub fn coeff_class(&self, n: usize, i: i64) -> Rational {
        assert!(n >= 1, "coeff_class needs n >= 1");
        let r = i.rem_euclid(n as i64) as usize;
        self.coeffs
            .iter()
            .skip(r)
            .step_by(n)
            .fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Periodic on `n` with period `d`: `d` is not a multiple of `n`, and the
    /// class sums modulo `n` are invariant under the shift `i -> i + d`.
    pub fn is_periodic(&self, n: usize, d: usize) -> bool {
        assert!(n >= 1 && d >= 1, "is_periodic needs n, d >= 1");
        if d.is_multiple_of(n) {
            return false;
        }
        let classes: Vec<Rational> = (0..n as i64).map(|i| self.coeff_class(n, i)).collect();
        (0..n).all(|i| classes[i] == classes[(i + d) % n])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        Polynomial::deserialize(value).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Coefficients as `i64`, if all are integers in range.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }
}

impl fmt::Display for Polynomial {
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
            write!(f, "{c}*x^{k}")?;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the canonical text format and the usual shorthands: omitted
    /// unit coefficients, bare constants, `x` without an exponent, `q` as
    /// the variable, `-` between terms, and terms in any order.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let binary_minus = ch == '-' && !matches!(prev, None | Some('+' | '*' | '^' | '/'));
            if ch == '+' || binary_minus {
                if !current.is_empty() {
                    terms.push(std::mem::take(&mut current));
                } else if ch == '+' {
                    return Err(Error::Parse(format!("dangling '+' in {s:?}")));
                }
                if binary_minus {
                    current.push('-');
                }
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("trailing operator in {s:?}")));
        }
        terms.push(current);
        let parsed = terms
            .iter()
            .map(|t| parse_term(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sparse(parsed))
    }
}

fn parse_term(term: &str) -> Result<(usize, Rational)> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    let (negative, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term),
    };
    let (coeff, exp) = match body.find(['x', 'q']) {
        None => (parse_rational(body).ok_or_else(bad)?, 0),
        Some(pos) => {
            let head = body[..pos].trim_end_matches('*');
            if pos > 0 && head.len() == pos {
                // "2x" without '*'
                return Err(bad());
            }
            let coeff = if head.is_empty() {
                Rational::one()
            } else {
                parse_rational(head).ok_or_else(bad)?
            };
            let tail = &body[pos + 1..];
            let exp = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(bad)?
            };
            (coeff, exp)
        }
    };
    Ok((exp, if negative { -coeff } else { coeff }))
}

fn parse_rational(s: &str) -> Option<Rational> {
    if s.is_empty() || s.starts_with('+') {
        return None;
    }
    let r = Rational::from_str(s).ok()?;
    Some(r)
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .coeffs
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let pairs = Vec::<[String; 2]>::deserialize(deserializer)?;
        let coeffs = pairs
            .iter()
            .map(|[n, d]| {
                let n = BigInt::from_str(n).map_err(D::Error::custom)?;
                let d = BigInt::from_str(d).map_err(D::Error::custom)?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(n, d))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Polynomial {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let x = a.get(k);
        let y = b.get(k);
        out.push(match (x, y) {
            (Some(x), Some(y)) if negate_b => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate_b => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    Polynomial::from_coeffs(out)
}

fn mul_coeffs(a: &[Rational], b: &[Rational]) -> Polynomial {
    if a.is_empty() || b.is_empty() {
        return Polynomial::zero();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    Polynomial::from_coeffs(out)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $tr::$method(&self, rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_coeffs(&a.coeffs, &b.coeffs, false));
forward_binop!(Sub, sub, |a, b| add_coeffs(&a.coeffs, &b.coeffs, true));
forward_binop!(Mul, mul, |a, b| mul_coeffs(&a.coeffs, &b.coeffs));

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

/// True when the value is an integer; returns it.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(&a + &Polynomial::zero(), a);
    }

    #[test]
    fn schoolbook_product() {
        let a = Polynomial::from_ints(&[1, 1, 1]);
        let b = Polynomial::from_ints(&[1, 1]);
        assert_eq!(a * b, Polynomial::from_ints(&[1, 2, 2, 1]));
    }

    #[test]
    fn cancellation_normalizes() {
        let a = Polynomial::from_ints(&[1, 2, 3]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).degree(), Degree::NegInfinity);
        assert_eq!(Polynomial::from_ints(&[0, 0, 0]), Polynomial::zero());
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn remainders() {
        let x2 = Polynomial::x_pow(2);
        assert_eq!(x2.rem(&Polynomial::from_ints(&[1, 1])).unwrap(), Polynomial::one());
        let phi6 = Polynomial::from_ints(&[1, -1, 1]);
        assert!(Polynomial::x_pow_minus_one(6).rem(&phi6).unwrap().is_zero());
        // x^3 = -x mod x^2 + 1, so 1 + 2x + x^3 leaves 1 + x
        let a = Polynomial::from_ints(&[1, 2, 0, 1]);
        assert_eq!(a.rem(&Polynomial::from_ints(&[1, 0, 1])).unwrap(), Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn rem_rejects_non_monic() {
        let m = Polynomial::from_ints(&[1, 2]);
        assert!(matches!(
            Polynomial::x_pow(3).rem(&m),
            Err(Error::NonMonicModulus(_))
        ));
        assert_eq!(Polynomial::one().rem(&Polynomial::zero()), Err(Error::DivisionByZero));
        assert!(Polynomial::one().rem(&Polynomial::one()).is_err());
    }

    #[test]
    fn div_rem_general_leading_coefficient() {
        // (2x^2 + 3x + 1) / (2x + 1) = x + 1
        let a = Polynomial::from_ints(&[1, 3, 2]);
        let m = Polynomial::from_ints(&[1, 2]);
        assert_eq!(a.exact_div(&m).unwrap(), Polynomial::from_ints(&[1, 1]));
        assert!(matches!(
            Polynomial::from_ints(&[2, 3, 2]).exact_div(&m),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn simplify_folds_exponents() {
        let a = Polynomial::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(a.simplify(3), Polynomial::from_ints(&[2, 2, 1]));
        assert_eq!(a.simplify(7), a);
        assert_eq!(Polynomial::x_pow(7).simplify(4), Polynomial::x_pow(3));
        assert_eq!(Polynomial::from_ints(&[1, -1, -1, 1]).simplify(2), Polynomial::zero());
    }

    #[test]
    fn class_sums() {
        let a = Polynomial::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(a.coeff_class(3, 0), rat(2));
        assert_eq!(a.coeff_class(3, -3), rat(2));
        assert_eq!(a.coeff_class(3, 5), a.coeff_class(3, 2));
        // N(3): subsets of {1,2,3} by sum
        let n3 = Polynomial::from_ints(&[1, 1, 1, 2, 1, 1, 1]);
        assert_eq!(n3.coeff_class(3, 0), rat(4));
    }

    #[test]
    fn periodicity_examples() {
        let a = Polynomial::from_ints(&[1, 2, 1, 2, 1, 2, 1, 2]);
        assert!(a.is_periodic(8, 2));
        assert!(a.is_periodic(8, 4));
        assert!(!a.is_periodic(8, 3));
        assert!(a.is_periodic(4, 2));
        assert!((1..6).all(|d| !a.is_periodic(2, d)));
        assert!(!a.is_periodic(8, 8));
        assert!(!a.is_periodic(8, 16));
    }

    #[test]
    fn text_format() {
        let a = Polynomial::from_coeffs(vec![rat(1), rat(-1), rat(0), rat_frac(3, 2)]);
        assert_eq!(a.to_string(), "1*x^0 + -1*x^1 + 3/2*x^3");
        assert_eq!(p(&a.to_string()), a);
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("0"), Polynomial::zero());
    }

    #[test]
    fn lenient_parsing() {
        assert_eq!(p("x^2 - x + 1"), Polynomial::from_ints(&[1, -1, 1]));
        assert_eq!(p("1+2*q+q^2"), Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(p("-x"), Polynomial::from_ints(&[0, -1]));
        assert_eq!(p("x^2 + -1*x^1 + 1"), Polynomial::from_ints(&[1, -1, 1]));
        assert_eq!(p("-1/2*x^0 + 1/2*x^1"), Polynomial::from_coeffs(vec![rat_frac(-1, 2), rat_frac(1, 2)]));
        assert_eq!(p("x + x"), Polynomial::from_ints(&[0, 2]));
        for bad in ["", "+", "x^", "2x", "1 +", "x^-1", "1/0"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_format() {
        let a = Polynomial::from_coeffs(vec![rat_frac(-1, 2), rat(0), rat(3)]);
        let v = a.to_json();
        assert_eq!(v.to_string(), r#"[["-1","2"],["0","1"],["3","1"]]"#);
        assert_eq!(Polynomial::from_json(&v).unwrap(), a);
        assert_eq!(Polynomial::zero().to_json().to_string(), "[]");
        let bad = serde_json::json!([["1", "0"]]);
        assert!(Polynomial::from_json(&bad).is_err());
    }

    #[test]
    fn integrality_witness() {
        let a = Polynomial::from_coeffs(vec![rat_frac(1, 2), rat_frac(1, 3)]);
        let w = a.integrality();
        assert!(!w.is_integral);
        assert_eq!(w.common_denominator, BigInt::from(6));
        let w = Polynomial::from_ints(&[4, -2]).integrality();
        assert!(w.is_integral);
        assert_eq!(w.common_denominator, BigInt::one());
    }

    #[test]
    fn sparse_input_densifies() {
        let a = Polynomial::from_sparse([(5, rat(1)), (0, rat(2)), (5, rat(-1))]);
        assert_eq!(a, Polynomial::constant(rat(2)));
    }
}
