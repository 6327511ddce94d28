use modenum_core::modular::reduce_mod_cyclotomic;
use modenum_core::number_theory::{cyclotomic, divisors};
use modenum_core::poly::rat;
use modenum_core::{
    canonical_rep, crt_combine, g_poly, invariant_equal, simplify_class_from_residues,
    simplify_from_residues, Polynomial, ResidueSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let len = rng.gen_range(0..=max_deg + 1);
    Polynomial::from_ints(&(0..len).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>())
}

#[test]
fn trivial_residues_reconstruct_simplification() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..40 {
        let f = random_poly(&mut rng, 200);
        for n in 1..=30u64 {
            let rs = ResidueSystem::trivial(&f, n);
            assert_eq!(simplify_from_residues(&rs), f.simplify(n as usize), "n = {n}");
        }
    }
}

#[test]
fn per_class_form_matches_full_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let f = random_poly(&mut rng, 60);
        for n in [1u64, 6, 12, 15] {
            let rs = ResidueSystem::trivial(&f, n);
            for i in -3..(n as i64 + 3) {
                assert_eq!(simplify_class_from_residues(&rs, i), f.coeff_class(n as usize, i));
            }
        }
    }
}

#[test]
fn perturbing_residues_by_cyclotomic_multiples_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let f = random_poly(&mut rng, 80);
        let n = rng.gen_range(1..=24u64);
        let base = ResidueSystem::trivial(&f, n);
        let perturbed = ResidueSystem::from_fn(n, |d| {
            let r = random_poly(&mut rng, 10);
            &f + &(r * cyclotomic(d))
        });
        assert_eq!(simplify_from_residues(&perturbed), simplify_from_residues(&base));
    }
}

#[test]
fn crt_sweep_equals_reconstruction_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let n = rng.gen_range(1..=24u64);
        let targets = ResidueSystem::from_fn(n, |_| random_poly(&mut rng, 12));
        let combined = crt_combine(&targets);
        assert_eq!(combined, simplify_from_residues(&targets), "n = {n}");
        assert!(combined.len() <= n as usize);
        for (d, a_d) in targets.iter() {
            let phi = cyclotomic(d);
            assert_eq!(combined.rem(&phi).unwrap(), a_d.rem(&phi).unwrap(), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn canonical_rep_clauses() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let a = random_poly(&mut rng, 100);
        for n in 1..=36u64 {
            let rep = canonical_rep(&a, n);
            assert!(rep.len() <= n as usize);
            let phi = cyclotomic(n);
            assert!((&rep - &a).rem(&phi).unwrap().is_zero());
            for &d in divisors(n).proper() {
                assert!(rep.rem(&Polynomial::x_pow_minus_one(d as usize)).unwrap().is_zero());
            }
            assert_eq!(canonical_rep(&rep, n), rep, "idempotence");
        }
    }
}

#[test]
fn canonical_rep_is_a_class_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let n = rng.gen_range(1..=20u64);
        let a = random_poly(&mut rng, 40);
        let r = random_poly(&mut rng, 15);
        let phi = cyclotomic(n);
        assert_eq!(canonical_rep(&(&a + &(&phi * &r)), n), canonical_rep(&a, n));
        assert!(g_poly(&(&phi * &r), n).is_zero());
    }
}

#[test]
fn invariant_equality_matches_remainder_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut equal_seen = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(1..=20u64);
        let a = random_poly(&mut rng, 25);
        // half the pairs share a class by construction
        let b = if rng.gen_bool(0.5) {
            &a + &(random_poly(&mut rng, 6) * cyclotomic(n))
        } else {
            random_poly(&mut rng, 25)
        };
        let oracle = (&a - &b).rem(&cyclotomic(n)).unwrap().is_zero();
        equal_seen += oracle as usize;
        assert_eq!(invariant_equal(&a, &b, n).unwrap(), oracle);
    }
    assert!(equal_seen > 500);
}

#[test]
fn reduced_residues_are_below_totient_degree() {
    let f = Polynomial::from_ints(&[5, -3, 2, 7, 0, 1, 1, -4, 9, 9, 9]);
    for d in 1..=30u64 {
        let r = reduce_mod_cyclotomic(&f, d);
        assert!(r.degree() < cyclotomic(d).degree());
        assert!((&f - &r).rem(&cyclotomic(d)).unwrap().is_zero());
    }
    assert_eq!(reduce_mod_cyclotomic(&f, 1), Polynomial::constant(rat(36)));
}
