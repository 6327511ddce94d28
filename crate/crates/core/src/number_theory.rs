//! Divisors, Möbius and totient functions, cyclotomic polynomials and
//! Ramanujan sums.
//!
//! Everything here works at desk scale: factorization is trial division and
//! cyclotomic polynomials come from the defining product
//! `prod_{d | n} Phi_d(x) = x^n - 1` by exact division, memoized by `n`.

use std::collections::HashMap;
use std::ops::Deref;
use std::sync::{Arc, OnceLock, RwLock};

use crate::poly::Polynomial;

/// The divisors of `n` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn proper(&self) -> &[u64] {
        &self.divisors[..self.divisors.len() - 1]
    }
}

impl Deref for DivisorList {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.divisors
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub fn divisors(n: u64) -> DivisorList {
    assert!(n >= 1, "divisors needs n >= 1");
    let mut divisors = vec![1];
    for (p, e) in factorize(n) {
        let len = divisors.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divisors.push(divisors[i] * pk);
            }
        }
    }
    divisors.sort_unstable();
    DivisorList { n, divisors }
}

pub fn moebius(n: u64) -> i64 {
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

type CyclotomicCache = RwLock<HashMap<u64, Arc<Polynomial>>>;

fn cache() -> &'static CyclotomicCache {
    static CACHE: OnceLock<CyclotomicCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, shared from a process-wide cache.
pub fn cyclotomic_arc(n: u64) -> Arc<Polynomial> {
    assert!(n >= 1, "cyclotomic needs n >= 1");
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let divs = divisors(n);
    let mut product = Polynomial::one();
    for &d in divs.proper() {
        product = &product * &*cyclotomic_arc(d);
    }
    let phi = Polynomial::x_pow_minus_one(n as usize)
        .exact_div(&product)
        .expect("x^n - 1 is divisible by the cyclotomic factors of its proper divisors");
    debug_assert!(phi.is_monic() && phi.is_integral());
    let phi = Arc::new(phi);
    let mut guard = cache().write().expect("cyclotomic cache poisoned");
    Arc::clone(guard.entry(n).or_insert(phi))
}

pub fn cyclotomic(n: u64) -> Polynomial {
    (*cyclotomic_arc(n)).clone()
}

/// Ramanujan sum `c_n(l) = sum_{d | gcd(n, l)} mu(n/d) d`.
///
/// `l` may be any integer; it is reduced into `[0, n)` first and
/// `gcd(n, 0) = n`, so `c_n(0) = phi(n)`.
pub fn ramanujan(n: u64, l: i64) -> i64 {
    assert!(n >= 1, "ramanujan needs n >= 1");
    let g = gcd(n, l.rem_euclid(n as i64) as u64);
    let value: i64 = divisors(g)
        .iter()
        .map(|&d| moebius(n / d) * d as i64)
        .sum();
    debug_assert_eq!(value, ramanujan_holder(n, l));
    value
}

/// Hölder's closed form `mu(n/g) phi(n) / phi(n/g)` with `g = gcd(n, l)`.
pub fn ramanujan_holder(n: u64, l: i64) -> i64 {
    assert!(n >= 1, "ramanujan needs n >= 1");
    let g = gcd(n, l.rem_euclid(n as i64) as u64);
    let m = n / g;
    moebius(m) * (euler_phi(n) / euler_phi(m)) as i64
}

/// `c_n(0), ..., c_n(n - 1)`; `c_n` is periodic with period `n`.
pub fn ramanujan_row(n: u64) -> Vec<i64> {
    (0..n as i64).map(|l| ramanujan(n, l)).collect()
}
