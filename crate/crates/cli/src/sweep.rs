//! Seeded random sweeps of the closed forms against their oracles.

use modenum_core::dyck::{flat_non_dyck_words, words};
use modenum_core::qcomb::{catalan_major_count, q_multinomial, q_multinomial_class};
use modenum_core::subset_sum::{subset_sum_class, subset_sum_counts_brute};
use modenum_core::{
    canonical_rep, crt_combine, cyclotomic, divisors, invariant_equal, simplify_from_residues,
    CatalanQuery, MultiIndex, Polynomial, ResidueSystem, SubsetSumQuery, WordKind,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{CliError, Report};

type Check = fn(&mut ChaCha8Rng, u32) -> Result<(), String>;

const PROPERTIES: &[(&str, Check)] = &[
    ("reconstruction", reconstruction),
    ("crt", crt),
    ("canonical-rep", canonical),
    ("invariant", invariant),
    ("qmultinomial", qmultinomial),
    ("catalan", catalan),
    ("subsetsum", subsetsum),
    ("delta", delta),
];

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let len = rng.gen_range(0..=max_deg + 1);
    Polynomial::from_ints(&(0..len).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn reconstruction(rng: &mut ChaCha8Rng, _cap: u32) -> Result<(), String> {
    let f = random_poly(rng, 200);
    let n = rng.gen_range(1..=30u64);
    let got = simplify_from_residues(&ResidueSystem::trivial(&f, n));
    ensure(got == f.simplify(n as usize), || format!("n = {n}, f = {f}"))
}

fn crt(rng: &mut ChaCha8Rng, _cap: u32) -> Result<(), String> {
    let n = rng.gen_range(1..=24u64);
    let targets = ResidueSystem::from_fn(n, |_| random_poly(rng, 10));
    let combined = crt_combine(&targets);
    for (d, t) in targets.iter() {
        let phi = cyclotomic(d);
        ensure(combined.rem(&phi).ok() == t.rem(&phi).ok(), || format!("n = {n}, d = {d}"))?;
    }
    Ok(())
}

fn canonical(rng: &mut ChaCha8Rng, _cap: u32) -> Result<(), String> {
    let a = random_poly(rng, 100);
    let n = rng.gen_range(1..=36u64);
    let rep = canonical_rep(&a, n);
    ensure((&rep - &a).rem(&cyclotomic(n)).is_ok_and(|r| r.is_zero()), || format!("n = {n}, a = {a}"))?;
    for &d in divisors(n).proper() {
        let r = rep.rem(&Polynomial::x_pow_minus_one(d as usize));
        ensure(r.is_ok_and(|r| r.is_zero()), || format!("n = {n}, d = {d}, a = {a}"))?;
    }
    Ok(())
}

fn invariant(rng: &mut ChaCha8Rng, _cap: u32) -> Result<(), String> {
    let n = rng.gen_range(1..=20u64);
    let a = random_poly(rng, 25);
    let b = if rng.gen_bool(0.5) {
        &a + &(random_poly(rng, 6) * cyclotomic(n))
    } else {
        random_poly(rng, 25)
    };
    let oracle = (&a - &b).rem(&cyclotomic(n)).map_err(|e| e.to_string())?.is_zero();
    let got = invariant_equal(&a, &b, n).map_err(|e| e.to_string())?;
    ensure(got == oracle, || format!("n = {n}, a = {a}, b = {b}"))
}

fn qmultinomial(rng: &mut ChaCha8Rng, _cap: u32) -> Result<(), String> {
    let parts = rng.gen_range(1..=3usize);
    let ks: Vec<u64> = (0..parts).map(|_| rng.gen_range(0..=5)).collect();
    let mi = MultiIndex::new(ks.iter().sum(), ks);
    let n = rng.gen_range(1..=10u64);
    let p = q_multinomial(&mi).map_err(|e| e.to_string())?;
    for i in 0..n as i64 {
        let got = q_multinomial_class(&mi, n, i).map_err(|e| e.to_string())?;
        ensure(got == p.coeff_class(n as usize, i), || format!("{mi:?}, n = {n}, i = {i}"))?;
    }
    Ok(())
}

fn catalan(rng: &mut ChaCha8Rng, cap: u32) -> Result<(), String> {
    let j = rng.gen_range(0..=(cap as u64 / 2).min(9));
    let n = rng.gen_range(1..=12u64);
    let mut counts = vec![0u64; n as usize];
    for w in words(WordKind::Dyck, j as usize, j as usize) {
        counts[(w.major_index() % n) as usize] += 1;
    }
    for i in 0..n as i64 {
        let got = catalan_major_count(CatalanQuery { j, n, i }).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(counts[i as usize]), || format!("j = {j}, n = {n}, i = {i}"))?;
    }
    Ok(())
}

fn subsetsum(rng: &mut ChaCha8Rng, cap: u32) -> Result<(), String> {
    let j = rng.gen_range(1..=(cap as u64).clamp(1, 18));
    let n = rng.gen_range(1..=j);
    let counts = subset_sum_counts_brute(j, n);
    for i in 0..n as i64 {
        let got = subset_sum_class(SubsetSumQuery { n, j, i }).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(counts[i as usize]), || format!("j = {j}, n = {n}, i = {i}"))?;
    }
    Ok(())
}

fn delta(rng: &mut ChaCha8Rng, cap: u32) -> Result<(), String> {
    let n = rng.gen_range(1..=(cap as usize).clamp(1, 12));
    let all = flat_non_dyck_words(n);
    if all.is_empty() {
        return Ok(());
    }
    let w = &all[rng.gen_range(0..all.len())];
    let d = w.delta().map_err(|e| e.to_string())?;
    ensure(d.is_flat_non_dyck(), || format!("delta({w}) = {d} left the domain"))?;
    ensure(d.delta_inv().ok().as_ref() == Some(w), || format!("delta_inv(delta({w})) != {w}"))?;
    let mut x = w.clone();
    for _ in 0..n {
        x = x.delta().map_err(|e| e.to_string())?;
    }
    ensure(&x == w, || format!("delta^{n}({w}) = {x}"))
}

pub fn run(seed: u64, cases: usize, cap: u32) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = format!("seed: {seed}\n");
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &(name, check) in PROPERTIES {
        let outcome = (0..cases).try_for_each(|_| check(&mut rng, cap));
        let status = match &outcome {
            Ok(()) => "ok".to_string(),
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                format!("FAIL ({e})")
            }
        };
        text.push_str(&format!("{name:<15} {cases:>5} cases  {status}\n"));
        rows.push(json!({ "property": name, "cases": cases, "ok": outcome.is_ok() }));
    }
    let report = Report::new(text.trim_end(), json!({ "seed": seed, "results": rows }));
    if failures.is_empty() {
        Ok(report)
    } else {
        Err(CliError::Mismatch { detail: failures.join("; "), report: Some(report) })
    }
}
