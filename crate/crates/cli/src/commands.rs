use std::collections::BTreeMap;

use modenum_core::dyck::{delta_class_count, enumerate_major, words};
use modenum_core::number_theory::{ramanujan_holder, ramanujan_row};
use modenum_core::qcomb::{
    catalan_major_count, catalan_number, multinomial, q_catalan, q_catalan_residue, q_multinomial,
    q_multinomial_class,
};
use modenum_core::subset_sum::{subset_sum_class, subset_sum_counts_brute};
use modenum_core::{
    canonical_rep, crt_combine, divisors, g_poly, invariant_equal, simplify_from_residues, CatalanQuery, CountTable, Error, MultiIndex, Polynomial, Provenance,
    Rational, ResidueSystem, SubsetSumQuery, Word, WordKind,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::{CliError, Report};

type Outcome = Result<Report, CliError>;

fn provenance(verified: bool) -> Provenance {
    if verified {
        Provenance::BothAgree
    } else {
        Provenance::ClosedForm
    }
}

fn poly_report(label: &str, p: &Polynomial, verified: bool, mut extra: Value) -> Report {
    let prov = provenance(verified);
    extra["poly"] = p.to_json();
    extra["text"] = json!(p.to_string());
    extra["provenance"] = json!(prov);
    let mut text = format!("{label}: {p}");
    if verified {
        text.push_str(&format!("\nprovenance: {prov}"));
    }
    Report::new(text, extra)
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::mismatch(what()))
    }
}

fn oracle_cap(size_log2: u64, cap: u32, what: &str) -> Result<(), CliError> {
    if size_log2 > cap as u64 {
        return Err(Error::Domain(format!(
            "{what} oracle needs about 2^{size_log2} steps, above MODENUM_MAX_BRUTE = {cap}"
        ))
        .into());
    }
    Ok(())
}

/// Cross-checks a closed-form table and renders it, or a single class of it.
fn table_report(closed: CountTable, oracle: Option<CountTable>, i: Option<i64>, mut extra: Value) -> Outcome {
    let table = match oracle {
        None => closed,
        Some(oracle) => match closed.clone().cross_check(&oracle) {
            Ok(t) => t,
            Err(mismatches) => {
                let detail = mismatches
                    .iter()
                    .map(|m| format!("class {}: closed form {} vs oracle {}", m.class, m.closed_form, m.oracle))
                    .collect::<Vec<_>>()
                    .join("; ");
                let report = Report::new(closed.to_string(), closed.to_json());
                return Err(CliError::Mismatch { detail, report: Some(report) });
            }
        },
    };
    let verified = table.provenance() == Provenance::BothAgree;
    match i {
        Some(i) => {
            let value = table.get(i);
            let mut text = value.to_string();
            if verified {
                text.push_str(&format!("\nprovenance: {}", table.provenance()));
            }
            extra["n"] = json!(table.n());
            extra["i"] = json!(i);
            extra["value"] = json!(value.to_string());
            extra["provenance"] = json!(table.provenance());
            Ok(Report::new(text, extra))
        }
        None => {
            let mut j = table.to_json();
            if let (Value::Object(base), Value::Object(more)) = (&mut j, extra) {
                base.extend(more);
            }
            Ok(Report::new(table.to_string(), j))
        }
    }
}

fn int_table(n: u64, values: Vec<BigInt>, prov: Provenance) -> CountTable {
    CountTable::new(n, values.into_iter().map(Rational::from_integer).collect(), prov)
        .expect("one value per class")
}

pub fn simplify(p: &Polynomial, n: u64, verify: bool) -> Outcome {
    let folded = p.simplify(n as usize);
    if verify {
        let by_rem = p.rem(&Polynomial::x_pow_minus_one(n as usize))?;
        require(by_rem == folded, || format!("fold {folded} vs remainder {by_rem}"))?;
        let rebuilt = simplify_from_residues(&ResidueSystem::trivial(p, n));
        require(rebuilt == folded, || format!("fold {folded} vs divisor sum {rebuilt}"))?;
    }
    Ok(poly_report("simplified", &folded, verify, json!({ "n": n })))
}

pub fn cyclotomic(n: u64, verify: bool) -> Outcome {
    let phi = modenum_core::cyclotomic(n);
    if verify {
        let product = divisors(n).iter().fold(Polynomial::one(), |acc, &d| acc * modenum_core::cyclotomic(d));
        require(product == Polynomial::x_pow_minus_one(n as usize), || {
            format!("product of Phi_d over d | {n} is {product}")
        })?;
    }
    let mut report = poly_report("cyclotomic", &phi, verify, json!({ "n": n }));
    if !verify {
        report.text = phi.to_string();
    }
    Ok(report)
}

pub fn ramanujan(n: u64, l: Option<i64>, verify: bool) -> Outcome {
    let row = match l {
        Some(l) => vec![(l, modenum_core::ramanujan(n, l))],
        None => ramanujan_row(n).into_iter().enumerate().map(|(l, c)| (l as i64, c)).collect(),
    };
    if verify {
        for &(l, c) in &row {
            let h = ramanujan_holder(n, l);
            require(c == h, || format!("c_{n}({l}): divisor sum {c} vs Holder {h}"))?;
        }
    }
    let prov = provenance(verify);
    let mut text = match l {
        Some(_) => row[0].1.to_string(),
        None => {
            let w = (n.saturating_sub(1)).to_string().len();
            let mut t = format!("{:>w$}  c_{n}(l)\n", "l");
            for (l, c) in &row {
                t.push_str(&format!("{l:>w$}  {c}\n"));
            }
            t.trim_end().to_string()
        }
    };
    if verify {
        text.push_str(&format!("\nprovenance: {prov}"));
    }
    let values: Vec<i64> = row.iter().map(|&(_, c)| c).collect();
    Ok(Report::new(text, json!({ "n": n, "l": l, "values": values, "provenance": prov })))
}

pub fn grep_invariant(p: &Polynomial, n: u64, other: Option<&Polynomial>, verify: bool) -> Outcome {
    let g = g_poly(p, n);
    let rep = canonical_rep(p, n);
    let phi = modenum_core::cyclotomic(n);
    if verify {
        let diff = (&rep - p).rem(&phi)?;
        require(diff.is_zero(), || format!("representative {rep} is not congruent to the input mod Phi_{n}"))?;
        for &d in divisors(n).proper() {
            let r = rep.rem(&Polynomial::x_pow_minus_one(d as usize))?;
            require(r.is_zero(), || format!("representative {rep} is {r} mod x^{d} - 1"))?;
        }
    }
    let prov = provenance(verify);
    let mut text = format!("invariant: {g}\nrepresentative: {rep}");
    let mut out = json!({
        "n": n,
        "invariant": g.to_json(),
        "invariant_text": g.to_string(),
        "representative": rep.to_json(),
        "representative_text": rep.to_string(),
        "provenance": prov,
    });
    if let Some(b) = other {
        let equal = invariant_equal(p, b, n)?;
        if verify {
            let oracle = (p - b).rem(&phi)?.is_zero();
            require(equal == oracle, || format!("invariant says {equal}, remainder says {oracle}"))?;
        }
        text.push_str(&format!("\ncongruent: {equal}"));
        out["congruent"] = json!(equal);
    }
    if verify {
        text.push_str(&format!("\nprovenance: {prov}"));
    }
    Ok(Report::new(text, out))
}

pub fn crt(n: u64, specs: &[String], verify: bool) -> Outcome {
    let mut residues = BTreeMap::new();
    for spec in specs {
        let (d, poly) = spec
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("residue {spec:?} is not of the form D=POLY")))?;
        let d: u64 = d
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad divisor in {spec:?}")))?;
        let poly: Polynomial = poly.parse()?;
        if residues.insert(d, poly).is_some() {
            return Err(CliError::Usage(format!("divisor {d} given twice")));
        }
    }
    let targets = ResidueSystem::new(n, residues)?;
    let combined = crt_combine(&targets);
    if verify {
        for (d, target) in targets.iter() {
            let phi = modenum_core::cyclotomic(d);
            let (got, want) = (combined.rem(&phi)?, target.rem(&phi)?);
            require(got == want, || format!("mod Phi_{d}: got {got}, wanted {want}"))?;
        }
        let formula = simplify_from_residues(&targets);
        require(formula == combined, || format!("sweep {combined} vs divisor sum {formula}"))?;
    }
    Ok(poly_report("combined", &combined, verify, json!({ "n": n })))
}

pub fn qmultinomial(j: u64, ks: Vec<u64>, n: Option<u64>, i: Option<i64>, verify: bool) -> Outcome {
    let mi = MultiIndex::new(j, ks);
    let Some(n) = n else {
        let p = q_multinomial(&mi)?;
        if verify {
            let at_one = p.eval(&Rational::from_integer(1.into()));
            let count = Rational::from_integer(multinomial(&mi));
            require(at_one == count, || format!("value at q = 1 is {at_one}, multinomial is {count}"))?;
        }
        return Ok(poly_report("q-multinomial", &p, verify, json!({ "j": j, "ks": mi.ks })));
    };
    let values = (0..n as i64)
        .map(|c| q_multinomial_class(&mi, n, c))
        .collect::<modenum_core::Result<Vec<_>>>()?;
    let closed = CountTable::new(n, values, Provenance::ClosedForm)?;
    let oracle = if verify {
        let p = q_multinomial(&mi)?;
        let vals = (0..n as i64).map(|c| p.coeff_class(n as usize, c)).collect();
        Some(CountTable::new(n, vals, Provenance::Oracle)?)
    } else {
        None
    };
    table_report(closed, oracle, i, json!({ "j": j, "ks": mi.ks }))
}

pub fn qcatalan(j: u64, n: Option<u64>, verify: bool, cap: u32) -> Outcome {
    let Some(n) = n else {
        let p = q_catalan(j)?;
        if verify {
            let at_one = p.eval(&Rational::from_integer(1.into()));
            let count = Rational::from_integer(catalan_number(j));
            require(at_one == count, || format!("value at q = 1 is {at_one}, Catalan number is {count}"))?;
            oracle_cap(2 * j, cap, "Dyck word")?;
            let direct = enumerate_major(WordKind::Dyck, j as usize, j as usize);
            require(direct == p, || format!("Dyck words give {direct}"))?;
        }
        return Ok(poly_report("q-catalan", &p, verify, json!({ "j": j })));
    };
    let residue = q_catalan_residue(j, n)?;
    if verify {
        let phi = modenum_core::cyclotomic(n);
        let (a, b) = (residue.rem(&phi)?, q_catalan(j)?.rem(&phi)?);
        require(a == b, || format!("closed-form residue {a} vs remainder {b}"))?;
    }
    Ok(poly_report("residue", &residue, verify, json!({ "j": j, "n": n })))
}

pub fn catalan(j: u64, n: u64, i: Option<i64>, verify: bool, cap: u32) -> Outcome {
    let values = (0..n as i64)
        .map(|c| catalan_major_count(CatalanQuery { j, n, i: c }))
        .collect::<modenum_core::Result<Vec<_>>>()?;
    let closed = int_table(n, values, Provenance::ClosedForm);
    let oracle = if verify {
        oracle_cap(2 * j, cap, "Dyck word")?;
        let mut counts = vec![BigInt::from(0); n as usize];
        for w in words(WordKind::Dyck, j as usize, j as usize) {
            counts[(w.major_index() % n) as usize] += 1;
        }
        Some(int_table(n, counts, Provenance::Oracle))
    } else {
        None
    };
    table_report(closed, oracle, i, json!({ "j": j }))
}

pub fn subsetsum(j: u64, n: u64, i: Option<i64>, verify: bool, cap: u32) -> Outcome {
    let values = (0..n as i64)
        .map(|c| subset_sum_class(SubsetSumQuery { n, j, i: c }))
        .collect::<modenum_core::Result<Vec<_>>>()?;
    let closed = int_table(n, values, Provenance::ClosedForm);
    let oracle = if verify {
        oracle_cap(j, cap, "subset")?;
        let counts = subset_sum_counts_brute(j, n).into_iter().map(BigInt::from).collect();
        Some(int_table(n, counts, Provenance::Oracle))
    } else {
        None
    };
    table_report(closed, oracle, i, json!({ "j": j }))
}

pub fn dyck_major(w: &Word) -> Outcome {
    let m = w.major_index();
    Ok(Report::new(m.to_string(), json!({ "word": w.to_string(), "major_index": m })))
}

pub fn dyck_descents(w: &Word) -> Outcome {
    let d = w.descent_count();
    Ok(Report::new(d.to_string(), json!({ "word": w.to_string(), "descents": d })))
}

pub fn dyck_orbit(w: &Word, verify: bool) -> Outcome {
    if !w.is_flat_non_dyck() {
        return Err(Error::NotFlatNonDyck(w.to_string()).into());
    }
    let orbit = w.delta_orbit()?;
    let n = w.len() as i64;
    if verify {
        let mut x = w.clone();
        for _ in 0..w.len() {
            x = x.delta()?;
        }
        require(&x == w, || format!("delta^{n} maps {w} to {x}"))?;
        for v in &orbit {
            let back = v.delta()?.delta_inv()?;
            require(&back == v, || format!("delta_inv(delta({v})) = {back}"))?;
        }
    }
    let steps: Vec<i64> = (0..orbit.len())
        .map(|k| {
            let next = &orbit[(k + 1) % orbit.len()];
            (next.major_index() as i64 - orbit[k].major_index() as i64).rem_euclid(n)
        })
        .collect();
    let mw = orbit.iter().map(|v| v.to_string().len()).max().unwrap_or(4).max(4);
    let mut text = format!("{:<mw$}  major  step\n", "word");
    for (v, s) in orbit.iter().zip(&steps) {
        text.push_str(&format!("{:<mw$}  {:>5}  {:>4}\n", v.to_string(), v.major_index(), s));
    }
    text.push_str(&format!("orbit length: {}", orbit.len()));
    if verify {
        text.push_str(&format!("\nprovenance: {}", Provenance::BothAgree));
    }
    let json = json!({
        "word": w.to_string(),
        "orbit": orbit.iter().map(|v| json!({ "word": v.to_string(), "major_index": v.major_index() })).collect::<Vec<_>>(),
        "steps": steps,
        "provenance": provenance(verify),
    });
    Ok(Report::new(text, json))
}

pub fn dyck_rigid(w: &Word, d: u64) -> Outcome {
    let rigid = w.is_d_rigid(d)?;
    let straightened = w.is_d_straightened(d)?;
    Ok(Report::new(
        format!("{d}-rigid: {rigid}\n{d}-straightened: {straightened}"),
        json!({ "word": w.to_string(), "d": d, "rigid": rigid, "straightened": straightened }),
    ))
}

pub fn dyck_classes(n: usize, cap: u32) -> Outcome {
    oracle_cap(n as u64, cap, "word")?;
    let classes = delta_class_count(n);
    Ok(Report::new(classes.to_string(), json!({ "n": n, "classes": classes })))
}
