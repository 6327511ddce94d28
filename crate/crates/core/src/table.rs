//! Per-class results with a record of how they were obtained.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Oracle,
    BothAgree,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
            Provenance::BothAgree => "both-agree",
        })
    }
}

/// Values indexed by residue class `0 <= i < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n: u64,
    values: Vec<Rational>,
    provenance: Provenance,
}

/// A closed-form table disagreed with its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub class: u64,
    pub closed_form: Rational,
    pub oracle: Rational,
}

impl CountTable {
    pub fn new(n: u64, values: Vec<Rational>, provenance: Provenance) -> Result<Self> {
        if n == 0 || values.len() as u64 != n {
            return Err(Error::Domain(format!(
                "count table for n = {n} needs {n} entries, got {}",
                values.len()
            )));
        }
        Ok(Self { n, values, provenance })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, i: i64) -> &Rational {
        &self.values[i.rem_euclid(self.n as i64) as usize]
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Compares a closed-form table against an oracle table; on exact
    /// agreement the result is marked [`Provenance::BothAgree`].
    pub fn cross_check(self, oracle: &CountTable) -> std::result::Result<CountTable, Vec<Mismatch>> {
        assert_eq!(self.n, oracle.n, "tables must have the same modulus");
        let mismatches: Vec<Mismatch> = self
            .values
            .iter()
            .zip(&oracle.values)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| Mismatch {
                class: i as u64,
                closed_form: a.clone(),
                oracle: b.clone(),
            })
            .collect();
        if mismatches.is_empty() {
            Ok(CountTable {
                provenance: Provenance::BothAgree,
                ..self
            })
        } else {
            Err(mismatches)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "values": self.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "provenance": self.provenance,
        })
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        let width = rendered.iter().map(String::len).max().unwrap_or(0).max(5);
        let iw = (self.n - 1).to_string().len().max(1);
        writeln!(f, "{:>iw$}  {:>width$}", "i", "count")?;
        for (i, v) in rendered.iter().enumerate() {
            writeln!(f, "{i:>iw$}  {v:>width$}")?;
        }
        write!(f, "provenance: {}", self.provenance)
    }
}
