//! Fixtures shared by the benchmarks.

use modenum_core::Polynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reproducible integer polynomials with coefficients in `[-9, 9]`.
pub fn random_polys(seed: u64, count: usize, degree: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
            Polynomial::from_ints(&coeffs)
        })
        .collect()
}
