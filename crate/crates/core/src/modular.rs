//! Reconstructing `n`-simplifications from residues modulo cyclotomic
//! polynomials.
//!
//! For `a` in `Q[x]` the invariant `G^n_i(a) = sum_s [x^s]a * c_n(i - s)`
//! depends only on `a mod Phi_n`. Summing it over the divisors of `n`
//! recovers every class sum `S^i_n(a)`:
//!
//! ```text
//! S^i_n(a) = (1/n) * sum_{d | n} G^d_i(m_d)      whenever m_d = a mod Phi_d
//! ```
//!
//! [`crt_combine`] builds the same polynomial by an explicit
//! Chinese-remainder sweep over the divisors in descending order, and
//! [`canonical_rep`] returns the unique `n`-simplified polynomial that agrees
//! with `a` modulo `Phi_n` and vanishes modulo `x^d - 1` for proper `d | n`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number_theory::{cyclotomic_arc, divisors, ramanujan, ramanujan_row};
use crate::poly::{rat, Polynomial, Rational};

/// A polynomial `m_d` for every divisor `d` of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    n: u64,
    residues: BTreeMap<u64, Polynomial>,
}

impl ResidueSystem {
    /// Fails unless the key set is exactly the divisors of `n`.
    pub fn new(n: u64, residues: BTreeMap<u64, Polynomial>) -> Result<Self> {
        if n == 0 || !residues.keys().copied().eq(divisors(n).iter().copied()) {
            return Err(Error::IncompleteResidueSystem { n });
        }
        Ok(Self { n, residues })
    }

    pub fn from_fn<F: FnMut(u64) -> Polynomial>(n: u64, mut f: F) -> Self {
        let residues = divisors(n).iter().map(|&d| (d, f(d))).collect();
        Self { n, residues }
    }

    /// `m_d = f` for every `d`.
    pub fn trivial(f: &Polynomial, n: u64) -> Self {
        Self::from_fn(n, |_| f.clone())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, d: u64) -> Option<&Polynomial> {
        self.residues.get(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Polynomial)> {
        self.residues.iter().map(|(&d, p)| (d, p))
    }
}

/// Remainder of `a` modulo `Phi_d`, folding modulo `x^d - 1` first.
pub fn reduce_mod_cyclotomic(a: &Polynomial, d: u64) -> Polynomial {
    let phi = cyclotomic_arc(d);
    a.simplify(d as usize)
        .rem(&phi)
        .expect("cyclotomic polynomials are monic of positive degree")
}

/// `G^n_i(a)`, straight from the defining sum over the support of `a`.
pub fn g_coeff(a: &Polynomial, n: u64, i: i64) -> Rational {
    a.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Rational::zero(), |acc, (s, c)| {
            acc + c * rat(ramanujan(n, i - s as i64))
        })
}

/// `G^n_i` for all `0 <= i < n` at once. `c_n` has period `n`, so the sum only
/// needs the class sums of `a` modulo `n`.
fn g_row(a: &Polynomial, n: u64) -> Vec<Rational> {
    let folded = a.simplify(n as usize);
    let c = ramanujan_row(n);
    let n = n as usize;
    (0..n)
        .map(|i| {
            folded
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .fold(Rational::zero(), |acc, (s, v)| {
                    let k = c[(i + n - s) % n];
                    if k == 0 {
                        acc
                    } else {
                        acc + v * rat(k)
                    }
                })
        })
        .collect()
}

/// `G^n(a) = (1/n) sum_{0 <= i < n} G^n_i(a) x^i`.
pub fn g_poly(a: &Polynomial, n: u64) -> Polynomial {
    assert!(n >= 1, "g_poly needs n >= 1");
    let inv_n = rat(1) / rat(n as i64);
    Polynomial::from_coeffs(g_row(a, n).into_iter().map(|g| g * &inv_n).collect())
}

/// `S^i_n(a)` from the residues alone.
pub fn simplify_class_from_residues(rs: &ResidueSystem, i: i64) -> Rational {
    let n = rs.n();
    let total = rs.iter().fold(Rational::zero(), |acc, (d, m)| {
        acc + g_coeff(&reduce_mod_cyclotomic(m, d), d, i)
    });
    total / rat(n as i64)
}

/// The unique `n`-simplified `a` with `a = m_d mod Phi_d` for every `d | n`.
pub fn simplify_from_residues(rs: &ResidueSystem) -> Polynomial {
    let n = rs.n() as usize;
    let mut acc = vec![Rational::zero(); n];
    for (d, m) in rs.iter() {
        let reduced = reduce_mod_cyclotomic(m, d);
        // G^d_i has period d in i, so one row of length d covers all n classes.
        let row = g_row(&reduced, d);
        for (i, slot) in acc.iter_mut().enumerate() {
            let g = &row[i % d as usize];
            if !g.is_zero() {
                *slot += g;
            }
        }
    }
    let inv_n = rat(1) / rat(n as i64);
    Polynomial::from_coeffs(acc.into_iter().map(|v| v * &inv_n).collect())
}

/// Chinese remaindering by the descending-divisor sweep
/// `e_i = e_{i-1} + (a_{d_i} - e_{i-1}) * (d_i / n) * (x^n - 1)/(x^{d_i} - 1)`,
/// then `n`-simplified.
pub fn crt_combine(targets: &ResidueSystem) -> Polynomial {
    let n = targets.n();
    let divs = divisors(n);
    let mut order = divs.iter().rev();
    let first = *order.next().expect("n has at least one divisor");
    let mut e = targets.get(first).expect("complete residue system").clone();
    for &d in order {
        let a_d = targets.get(d).expect("complete residue system");
        // 1 + x^d + x^{2d} + ... + x^{n-d}
        let geometric = Polynomial::from_sparse(
            (0..n / d).map(|t| ((t * d) as usize, rat(1))),
        );
        let scale = rat(d as i64) / rat(n as i64);
        let step = (a_d - &e).scale(&scale) * geometric;
        e += &step;
    }
    e.simplify(n as usize)
}

/// `G^n(a)`: the unique `n`-simplified polynomial congruent to `a` modulo
/// `Phi_n` and to zero modulo `x^d - 1` for every proper divisor `d` of `n`.
pub fn canonical_rep(a: &Polynomial, n: u64) -> Polynomial {
    let rep = g_poly(a, n);
    debug_assert!(
        reduce_mod_cyclotomic(&(&rep - a), n).is_zero(),
        "canonical representative must agree with the input modulo Phi_n"
    );
    debug_assert!(
        divisors(n).proper().iter().all(|&d| rep.simplify(d as usize).is_zero()),
        "canonical representative must vanish modulo x^d - 1 for proper d | n"
    );
    rep
}

/// Whether `a = b mod Phi_n` in `Z[x]`, decided by comparing `G^n(a)` and
/// `G^n(b)`. Only integral inputs are accepted.
pub fn invariant_equal(a: &Polynomial, b: &Polynomial, n: u64) -> Result<bool> {
    for p in [a, b] {
        let w = p.integrality();
        if !w.is_integral {
            return Err(Error::NonIntegralInput(w.common_denominator.to_string()));
        }
    }
    Ok(g_row(a, n) == g_row(b, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::cyclotomic;
    use crate::poly::rat_frac;

    fn half_poly(c0: i64, c1: i64) -> Polynomial {
        Polynomial::from_coeffs(vec![rat_frac(c0, 2), rat_frac(c1, 2)])
    }

    #[test]
    fn invariant_kills_cyclotomic() {
        for n in 1..=30 {
            let phi = cyclotomic(n);
            for i in 0..n as i64 {
                assert!(g_coeff(&phi, n, i).is_zero(), "n = {n}, i = {i}");
            }
            assert!(g_poly(&phi, n).is_zero());
        }
    }

    #[test]
    fn invariant_of_one_for_n_two() {
        assert_eq!(g_coeff(&Polynomial::one(), 2, 0), rat(1));
        assert_eq!(g_coeff(&Polynomial::one(), 2, 1), rat(-1));
    }

    #[test]
    fn invariant_shift_identity() {
        let c = Polynomial::from_ints(&[3, -1, 4, 1, -5]);
        for n in 1..=12u64 {
            for t in 0..7usize {
                let shifted = c.shift(t);
                for i in -15..15i64 {
                    assert_eq!(g_coeff(&shifted, n, i), g_coeff(&c, n, i - t as i64));
                }
            }
        }
    }

    #[test]
    fn g_poly_small_cases() {
        assert_eq!(g_poly(&Polynomial::x_pow(1), 2), half_poly(-1, 1));
        assert_eq!(g_poly(&Polynomial::one(), 2), half_poly(1, -1));
        // the two congruences that pin (x - 1)/2 down
        let g = half_poly(-1, 1);
        assert_eq!(g.rem(&cyclotomic(2)).unwrap(), Polynomial::constant(rat(-1)));
        assert!(g.rem(&cyclotomic(1)).unwrap().is_zero());
    }

    #[test]
    fn g_poly_matches_definition() {
        let a = Polynomial::from_ints(&[2, 0, -3, 1, 1, 0, 0, 7, -2, 1, 5]);
        for n in 1..=14u64 {
            let direct = Polynomial::from_coeffs(
                (0..n as i64)
                    .map(|i| g_coeff(&a, n, i) / rat(n as i64))
                    .collect(),
            );
            assert_eq!(g_poly(&a, n), direct);
        }
    }

    #[test]
    fn residue_system_validation() {
        let mut m = BTreeMap::new();
        m.insert(1, Polynomial::zero());
        assert!(ResidueSystem::new(2, m.clone()).is_err());
        m.insert(2, Polynomial::one());
        let rs = ResidueSystem::new(2, m.clone()).unwrap();
        assert_eq!(simplify_from_residues(&rs), half_poly(1, -1));
        assert_eq!(crt_combine(&rs), half_poly(1, -1));
        m.insert(3, Polynomial::one());
        assert!(ResidueSystem::new(2, m).is_err());
        assert!(ResidueSystem::new(0, BTreeMap::new()).is_err());
    }

    #[test]
    fn degenerate_n_one() {
        let f = Polynomial::from_ints(&[1, 2, 3]);
        let rs = ResidueSystem::trivial(&f, 1);
        assert_eq!(simplify_from_residues(&rs), Polynomial::constant(rat(6)));
        assert_eq!(crt_combine(&rs), Polynomial::constant(rat(6)));
        assert_eq!(canonical_rep(&f, 1), Polynomial::constant(rat(6)));
        assert_eq!(simplify_class_from_residues(&rs, 5), rat(6));
    }

    #[test]
    fn constant_targets_give_constant() {
        for n in 1..=24 {
            let c = Polynomial::constant(rat_frac(7, 3));
            let rs = ResidueSystem::trivial(&c, n);
            assert_eq!(crt_combine(&rs), c);
            assert_eq!(simplify_from_residues(&rs), c);
        }
    }

    #[test]
    fn canonical_rep_basics() {
        assert!(canonical_rep(&Polynomial::zero(), 9).is_zero());
        assert_eq!(canonical_rep(&Polynomial::x_pow(1), 2), half_poly(-1, 1));
    }

    #[test]
    fn invariant_equal_rejects_fractions() {
        let a = half_poly(1, 1);
        assert!(matches!(
            invariant_equal(&a, &Polynomial::one(), 3),
            Err(Error::NonIntegralInput(_))
        ));
        let b = Polynomial::from_ints(&[1, 1, 1]);
        assert!(invariant_equal(&b, &b, 3).unwrap());
        assert!(invariant_equal(&b, &Polynomial::zero(), 3).unwrap());
        assert!(!invariant_equal(&b, &Polynomial::zero(), 4).unwrap());
    }
}
