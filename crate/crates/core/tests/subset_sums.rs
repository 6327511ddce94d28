use modenum_core::dyck::Word;
use modenum_core::number_theory::cyclotomic;
use modenum_core::poly::rat;
use modenum_core::subset_sum::{
    subset_sum_class, subset_sum_class_divisible, subset_sum_counts_brute, subset_sum_poly,
    subset_sum_residue,
};
use modenum_core::{Polynomial, SubsetSumQuery};
use num_bigint::BigInt;

/// Histogram of subset sums by explicit enumeration of subsets.
fn sum_histogram(j: u64) -> Vec<u64> {
    let mut hist = vec![0u64; (j * (j + 1) / 2 + 1) as usize];
    for mask in 0u64..1 << j {
        let s: u64 = (0..j).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
        hist[s as usize] += 1;
    }
    hist
}

#[test]
fn closed_form_matches_enumeration() {
    for j in 1..=20u64 {
        let hist = sum_histogram(j);
        for n in 1..=j {
            let mut expected = vec![0u64; n as usize];
            for (s, c) in hist.iter().enumerate() {
                expected[s % n as usize] += c;
            }
            let mut total = BigInt::from(0);
            for i in 0..n as i64 {
                let v = subset_sum_class(SubsetSumQuery { n, j, i }).unwrap();
                assert_eq!(v, BigInt::from(expected[i as usize]), "n={n} j={j} i={i}");
                total += v;
            }
            assert_eq!(total, BigInt::from(1u64 << j));
        }
    }
}

#[test]
fn expanded_polynomial_matches_enumeration() {
    for j in 0..=14 {
        let hist: Vec<i64> = sum_histogram(j).into_iter().map(|c| c as i64).collect();
        assert_eq!(subset_sum_poly(j), Polynomial::from_ints(&hist));
    }
}

#[test]
fn brute_counter_matches_enumeration() {
    for j in 0..=14u64 {
        let hist = sum_histogram(j);
        for n in 1..=16u64 {
            let mut expected = vec![0u64; n as usize];
            for (s, c) in hist.iter().enumerate() {
                expected[s % n as usize] += c;
            }
            assert_eq!(subset_sum_counts_brute(j, n), expected);
        }
    }
}

#[test]
fn residues_match_remainders() {
    for j in 1..=16u64 {
        let full = subset_sum_poly(j);
        for d in 1..=j {
            let phi = cyclotomic(d);
            let r = subset_sum_residue(j, d).unwrap();
            assert_eq!(r.rem(&phi).unwrap(), full.rem(&phi).unwrap(), "j={j} d={d}");
        }
    }
}

/// Rotating the indicator word of a subset of {1..d} adds its size to the sum mod d.
#[test]
fn rotation_orbits_of_subsets_are_periodic() {
    for d in 2..=12usize {
        for mask in 1u32..(1 << d) - 1 {
            let w = Word::new((0..d).map(|b| mask >> b & 1 == 1).collect());
            let k = w.ones();
            let mut poly = Polynomial::zero();
            let mut x = w.clone();
            for _ in 0..d {
                let s: usize = x.letters().iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).sum();
                poly += &Polynomial::monomial(rat(1), s);
                x = x.gamma().unwrap();
            }
            assert!(poly.is_periodic(d, k), "d={d} word={w}");
            assert!(poly.rem(&cyclotomic(d as u64)).unwrap().is_zero());
        }
    }
}

#[test]
fn divisible_special_case_agrees() {
    for j in 1..=30u64 {
        for n in 1..=j {
            let q = SubsetSumQuery { n, j, i: (j % 7) as i64 };
            if let Ok(v) = subset_sum_class_divisible(q) {
                assert_eq!(v, subset_sum_class(q).unwrap(), "n={n} j={j}");
            }
        }
    }
}

#[test]
fn worked_example_with_brute_force() {
    let counts = subset_sum_counts_brute(22, 12);
    assert_eq!(counts[5], 349504);
    assert_eq!(subset_sum_class(SubsetSumQuery { n: 12, j: 22, i: 5 }).unwrap(), BigInt::from(349504));
}
