//! q-multinomial coefficients and q-Catalan numbers modulo `q^n - 1`.
//!
//! Residues modulo `Phi_n(q)` come from the q-Lucas theorem (split every
//! argument into base-`n` quotient and remainder digits); feeding them through
//! the divisor-sum reconstruction gives closed forms for the class counts
//! that only need the polynomials of remainder digits, all below `d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number_theory::{divisors, ramanujan};
use crate::poly::{as_integer, rat, Polynomial, Rational};

/// Parameters of the q-multinomial `[j; k_1, ..., k_l]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    pub j: u64,
    pub ks: Vec<u64>,
}

impl MultiIndex {
    pub fn new(j: u64, ks: impl Into<Vec<u64>>) -> Self {
        Self { j, ks: ks.into() }
    }

    pub fn is_balanced(&self) -> bool {
        self.ks.iter().sum::<u64>() == self.j
    }

    /// Base-`d` split: `(quotient digits, remainder digits)`.
    pub fn split(&self, d: u64) -> (MultiIndex, MultiIndex) {
        let quot = MultiIndex::new(self.j / d, self.ks.iter().map(|k| k / d).collect::<Vec<_>>());
        let rem = MultiIndex::new(self.j % d, self.ks.iter().map(|k| k % d).collect::<Vec<_>>());
        (quot, rem)
    }
}

/// Parameters of `^jM^i_n`: Dyck words with `j` ones and `j` zeros whose
/// major index is `i` modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CatalanQuery {
    pub j: u64,
    pub n: u64,
    pub i: i64,
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, t| acc * (n - t) / (t + 1))
}

/// Ordinary multinomial; zero when the parts do not sum to `j`.
pub fn multinomial(mi: &MultiIndex) -> BigInt {
    if !mi.is_balanced() {
        return BigInt::zero();
    }
    let mut remaining = mi.j;
    let mut acc = BigInt::one();
    for &k in &mi.ks {
        acc *= binomial(remaining, k);
        remaining -= k;
    }
    acc
}

pub fn catalan_number(j: u64) -> BigInt {
    binomial(2 * j, j) / (j + 1)
}

/// `[s] = 1 + q + ... + q^{s-1}`.
pub fn q_integer(s: u64) -> Polynomial {
    Polynomial::from_coeffs(vec![rat(1); s as usize])
}

/// `[s]! = [1][2]...[s]`.
pub fn q_factorial(s: u64) -> Polynomial {
    (1..=s).fold(Polynomial::one(), |acc, t| acc * q_integer(t))
}

/// `[j]! / ([k_1]! ... [k_l]!)`, or zero when the parts do not sum to `j`.
pub fn q_multinomial(mi: &MultiIndex) -> Result<Polynomial> {
    if !mi.is_balanced() {
        return Ok(Polynomial::zero());
    }
    let mut acc = Polynomial::one();
    let mut top = mi.j;
    // peel off one part at a time: [top; k] = [top]!/([k]! [top-k]!)
    for &k in &mi.ks {
        let rest = top - k;
        let mut num = Polynomial::one();
        for t in rest + 1..=top {
            num = num * q_integer(t);
        }
        acc = acc * num.exact_div(&q_factorial(k))?;
        top = rest;
    }
    Ok(acc)
}

/// q-Lucas residue: `multinomial(quotient digits) * [remainder digits]_q`,
/// congruent to the q-multinomial modulo `Phi_n(q)`.
pub fn q_multinomial_residue(mi: &MultiIndex, n: u64) -> Result<Polynomial> {
    assert!(n >= 1, "q_multinomial_residue needs n >= 1");
    let (quot, rem) = mi.split(n);
    let factor = multinomial(&quot);
    if factor.is_zero() {
        return Ok(Polynomial::zero());
    }
    Ok(q_multinomial(&rem)?.scale(&Rational::from_integer(factor)))
}

fn inner_class_sum(base: &Polynomial, d: u64, i: i64) -> Rational {
    (0..d as i64).fold(Rational::zero(), |acc, s| {
        let c = ramanujan(d, i - s);
        if c == 0 {
            acc
        } else {
            acc + base.coeff_class(d as usize, s) * rat(c)
        }
    })
}

/// `S^i_n` of the q-multinomial through the divisor sum restricted to
/// divisors `d` with `R_d = sum_t (k_t mod d) < d`.
pub fn q_multinomial_class(mi: &MultiIndex, n: u64, i: i64) -> Result<Rational> {
    assert!(n >= 1, "q_multinomial_class needs n >= 1");
    if !mi.is_balanced() {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    for &d in divisors(n).iter() {
        let r_sum: u64 = mi.ks.iter().map(|k| k % d).sum();
        if r_sum >= d {
            continue;
        }
        let (quot, rem) = mi.split(d);
        let factor = multinomial(&quot);
        let base = q_multinomial(&rem)?;
        total += Rational::from_integer(factor) * inner_class_sum(&base, d, i);
    }
    Ok(total / rat(n as i64))
}

/// The collapsed form for `n | j`:
/// `(1/n) sum_{d | gcd(k_1, ..., k_l, n)} multinomial(j/d; k/d) c_d(i)`.
pub fn q_multinomial_class_divisible(mi: &MultiIndex, n: u64, i: i64) -> Result<Rational> {
    if n == 0 || !mi.j.is_multiple_of(n) {
        return Err(Error::Domain(format!("needs n | j, got n = {n}, j = {}", mi.j)));
    }
    if !mi.is_balanced() {
        return Ok(Rational::zero());
    }
    let g = mi.ks.iter().fold(n, |acc, &k| acc.gcd(&k));
    let total = divisors(g).iter().fold(Rational::zero(), |acc, &d| {
        let quot = MultiIndex::new(mi.j / d, mi.ks.iter().map(|k| k / d).collect::<Vec<_>>());
        acc + Rational::from_integer(multinomial(&quot)) * rat(ramanujan(d, i))
    });
    Ok(total / rat(n as i64))
}

/// `C_j(q) = (1 - q)/(1 - q^{j+1}) [2j; j]`.
pub fn q_catalan(j: u64) -> Result<Polynomial> {
    let central = q_multinomial(&MultiIndex::new(2 * j, vec![j, j]))?;
    let numerator = central * Polynomial::from_ints(&[1, -1]);
    // 1 - q^{j+1}
    let denominator = -Polynomial::x_pow_minus_one(j as usize + 1);
    numerator.exact_div(&denominator)
}

/// Residue of `C_j(q)` modulo `Phi_n(q)` for `n >= 2`, with `g = j mod n`:
/// `binom((2j-2g)/n, (j-g)/n) C_g(q)` if `2g < n`, `-q binom((2j-n+2)/n, (j+1)/n)`
/// if `g = n - 1`, and zero otherwise.
pub fn q_catalan_residue(j: u64, n: u64) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Domain(format!("q_catalan_residue needs n >= 2, got {n}")));
    }
    let g = j % n;
    if 2 * g < n {
        let b = binomial((2 * j - 2 * g) / n, (j - g) / n);
        Ok(q_catalan(g)?.scale(&Rational::from_integer(b)))
    } else if g == n - 1 {
        let b = binomial((2 * j + 2 - n) / n, (j + 1) / n);
        Ok(Polynomial::monomial(-Rational::from_integer(b), 1))
    } else {
        Ok(Polynomial::zero())
    }
}

/// `^jM^i_n` by the divisor-sum closed form. Base values for `r_d = j mod d`
/// come from the class sums of the (small) polynomial `C_{r_d}(q)`.
pub fn catalan_major_count(cq: CatalanQuery) -> Result<BigInt> {
    let CatalanQuery { j, n, i } = cq;
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let mut total = Rational::from_integer(catalan_number(j));
    for &d in divisors(n).iter().skip(1) {
        let b = Rational::from_integer(binomial(2 * j / d, j / d));
        if 2 * j / d == 2 * (j / d) {
            let base = q_catalan(j % d)?;
            total += b * inner_class_sum(&base, d, i);
        } else if j % d == d - 1 {
            total -= b * rat(ramanujan(d, i - 1));
        }
    }
    let value = total / rat(n as i64);
    match as_integer(&value) {
        Some(v) if v >= BigInt::zero() => Ok(v),
        _ => Err(Error::NonIntegerResult(value.to_string())),
    }
}

/// The two collapsed forms: `n | j` and `n | j + 1`. `None` elsewhere.
pub fn catalan_major_count_collapsed(cq: CatalanQuery) -> Option<BigInt> {
    let CatalanQuery { j, n, i } = cq;
    if n == 0 {
        return None;
    }
    let sign: i64 = if j % n == 0 {
        1
    } else if (j + 1) % n == 0 {
        -1
    } else {
        return None;
    };
    let shift = if sign == 1 { 0 } else { 1 };
    let mut total = Rational::from_integer(catalan_number(j));
    for &d in divisors(n).iter().skip(1) {
        let b = Rational::from_integer(binomial(2 * j / d, j / d));
        total += b * rat(sign * ramanujan(d, i - shift));
    }
    as_integer(&(total / rat(n as i64)))
}
