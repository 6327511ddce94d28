//! Subsets of `{1, ..., j}` counted by their sum modulo `n`.
//!
//! `N(j) = prod_{t <= j} (1 + x^t)` vanishes modulo `Phi_d` for even `d <= j`
//! and is `2^{floor(j/d)} N(j mod d)` modulo `Phi_d` for odd `d <= j`, so only
//! odd divisors survive in the class-count formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number_theory::{divisors, ramanujan};
use crate::poly::{as_integer, rat, Polynomial, Rational};

/// Parameters of `S^i_n(N(j))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetSumQuery {
    pub n: u64,
    pub j: u64,
    pub i: i64,
}

/// `N(j)`, expanded.
pub fn subset_sum_poly(j: u64) -> Polynomial {
    let top = (j * (j + 1) / 2) as usize;
    let mut counts = vec![BigInt::zero(); top + 1];
    counts[0] = BigInt::one();
    let mut reach = 0usize;
    for t in 1..=j as usize {
        reach += t;
        for s in (t..=reach).rev() {
            let (lo, hi) = counts.split_at_mut(s);
            hi[0] += &lo[s - t];
        }
    }
    Polynomial::from_big_ints(counts)
}

/// Residue of `N(j)` modulo `Phi_d` for `0 < d <= j`.
pub fn subset_sum_residue(j: u64, d: u64) -> Result<Polynomial> {
    if d == 0 || d > j {
        return Err(Error::Domain(format!("subset-sum residue needs 0 < d <= j, got d = {d}, j = {j}")));
    }
    if d.is_multiple_of(2) {
        return Ok(Polynomial::zero());
    }
    let factor = Rational::from_integer(BigInt::one() << (j / d) as usize);
    Ok(subset_sum_poly(j % d).scale(&factor))
}

/// Number of subsets of `{1, ..., j}` with sum `i` modulo `n`, for `0 < n <= j`.
pub fn subset_sum_class(q: SubsetSumQuery) -> Result<BigInt> {
    let SubsetSumQuery { n, j, i } = q;
    if n == 0 || n > j {
        return Err(Error::Domain(format!("subset-sum formula needs 0 < n <= j, got n = {n}, j = {j}")));
    }
    let mut total = Rational::zero();
    for &d in divisors(n).iter().filter(|&&d| d % 2 == 1) {
        let base = subset_sum_poly(j % d);
        let inner = (0..d as i64).fold(Rational::zero(), |acc, s| {
            acc + base.coeff_class(d as usize, s) * rat(ramanujan(d, i - s))
        });
        total += Rational::from_integer(BigInt::one() << (j / d) as usize) * inner;
    }
    let value = total / rat(n as i64);
    match as_integer(&value) {
        Some(v) if v >= BigInt::zero() => Ok(v),
        _ => Err(Error::NonIntegerResult(value.to_string())),
    }
}

/// The special case where every odd divisor of `n` also divides `j`:
/// `(1/n) sum_{odd d | n} 2^{floor(j/d)} c_d(i)`.
pub fn subset_sum_class_divisible(q: SubsetSumQuery) -> Result<BigInt> {
    let SubsetSumQuery { n, j, i } = q;
    if n == 0 || n > j {
        return Err(Error::Domain(format!("needs 0 < n <= j, got n = {n}, j = {j}")));
    }
    let odd: Vec<u64> = divisors(n).iter().copied().filter(|d| d % 2 == 1).collect();
    if odd.iter().any(|d| j % d != 0) {
        return Err(Error::Domain(format!("needs every odd divisor of {n} to divide {j}")));
    }
    let total = odd.iter().fold(Rational::zero(), |acc, &d| {
        acc + Rational::from_integer(BigInt::one() << (j / d) as usize) * rat(ramanujan(d, i))
    });
    as_integer(&(total / rat(n as i64))).ok_or_else(|| Error::NonIntegerResult(format!("n = {n}, j = {j}")))
}

/// Class counts by walking all `2^j` subsets. Intended for `j <= 24`.
pub fn subset_sum_counts_brute(j: u64, n: u64) -> Vec<u64> {
    assert!(n >= 1 && j < 40, "brute force needs n >= 1 and a small j");
    let n = n as usize;
    let mut counts = vec![0u64; n];
    // sums[mask] = sums[mask without its lowest bit] + (index of that bit + 1)
    let size = 1usize << j;
    let mut sums = vec![0u32; size];
    counts[0] += 1;
    for mask in 1..size {
        let low = mask.trailing_zeros();
        let s = sums[mask & (mask - 1)] + low + 1;
        sums[mask] = s;
        counts[s as usize % n] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polynomials() {
        assert_eq!(subset_sum_poly(0), Polynomial::one());
        assert_eq!(subset_sum_poly(3), Polynomial::from_ints(&[1, 1, 1, 2, 1, 1, 1]));
        for j in 0..=20 {
            assert_eq!(subset_sum_poly(j).eval(&rat(1)), rat(1 << j));
        }
    }

    #[test]
    fn residue_domain() {
        assert!(subset_sum_residue(3, 4).is_err());
        assert!(subset_sum_residue(3, 0).is_err());
        assert!(subset_sum_residue(6, 4).unwrap().is_zero());
        for d in [1u64, 3, 5, 7] {
            assert_eq!(subset_sum_residue(d, d).unwrap(), Polynomial::constant(rat(2)));
        }
    }

    #[test]
    fn worked_example() {
        let q = SubsetSumQuery { n: 12, j: 22, i: 5 };
        assert_eq!(subset_sum_class(q).unwrap(), BigInt::from(349504));
        assert_eq!(
            subset_sum_class(SubsetSumQuery { n: 3, j: 3, i: 0 }).unwrap(),
            BigInt::from(4)
        );
        assert!(subset_sum_class(SubsetSumQuery { n: 5, j: 3, i: 0 }).is_err());
    }

    #[test]
    fn brute_counts() {
        assert_eq!(subset_sum_counts_brute(3, 3), vec![4, 2, 2]);
        assert_eq!(subset_sum_counts_brute(0, 4), vec![1, 0, 0, 0]);
    }

    #[test]
    fn divisible_special_case() {
        // odd divisors of 12 are 1 and 3; both divide 21
        let q = SubsetSumQuery { n: 12, j: 21, i: 7 };
        assert_eq!(subset_sum_class_divisible(q).unwrap(), subset_sum_class(q).unwrap());
        assert!(subset_sum_class_divisible(SubsetSumQuery { n: 12, j: 22, i: 0 }).is_err());
    }
}
