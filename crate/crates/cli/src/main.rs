//! `modenum`: exact counts modulo `x^n - 1` from the command line.

mod commands;
mod report;
mod sweep;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use modenum_core::{Polynomial, Word};

use crate::report::CliError;

pub const DEFAULT_SEED: u64 = 20_250_917;
const DEFAULT_MAX_BRUTE: u32 = 24;

#[derive(Parser, Debug)]
#[command(name = "modenum", version, about = "Counting modulo x^n - 1 through cyclotomic residues")]
struct Cli {
    /// Print JSON instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    /// Also run the brute-force oracle and fail on disagreement.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fold exponents of a polynomial modulo n.
    Simplify {
        #[arg(short, value_parser = positive)]
        n: u64,
        #[arg(allow_hyphen_values = true)]
        poly: Polynomial,
    },
    /// The n-th cyclotomic polynomial.
    Cyclotomic {
        #[arg(value_parser = positive)]
        n: u64,
    },
    /// Ramanujan sum c_n(l), or the whole row l = 0..n.
    Ramanujan {
        #[arg(value_parser = positive)]
        n: u64,
        #[arg(allow_negative_numbers = true)]
        l: Option<i64>,
    },
    /// The invariant G^n(a) and the canonical representative of a modulo Phi_n.
    GrepInvariant {
        #[arg(short, value_parser = positive)]
        n: u64,
        #[arg(allow_hyphen_values = true)]
        poly: Polynomial,
        /// Decide whether this polynomial is congruent to POLY modulo Phi_n.
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<Polynomial>,
    },
    /// Combine one residue per divisor of n into a polynomial modulo x^n - 1.
    Crt {
        #[arg(short, value_parser = positive)]
        n: u64,
        /// `D=POLY`, once for every divisor D of n.
        #[arg(short, long = "residue", value_name = "D=POLY", allow_hyphen_values = true)]
        residues: Vec<String>,
    },
    /// q-multinomial [j; k_1, ..., k_l], or its class sums modulo n.
    Qmultinomial {
        #[arg(short)]
        j: u64,
        #[arg(short, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// q-Catalan polynomial, or its residue modulo Phi_n.
    Qcatalan {
        #[arg(short)]
        j: u64,
        #[arg(short)]
        n: Option<u64>,
    },
    /// Dyck words with j ones by major index modulo n.
    Catalan {
        #[arg(short)]
        j: u64,
        #[command(flatten)]
        class: RequiredClassArgs,
    },
    /// Subsets of {1..j} by sum modulo n.
    Subsetsum {
        #[arg(short)]
        j: u64,
        #[command(flatten)]
        class: RequiredClassArgs,
    },
    /// Queries on binary words.
    Dyck {
        #[command(subcommand)]
        query: DyckQuery,
    },
    /// Randomized property checks against the oracles.
    Sweep {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random cases per property.
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(short, value_parser = positive)]
    n: Option<u64>,
    /// Report a single class instead of the whole table.
    #[arg(short, requires = "n", allow_negative_numbers = true)]
    i: Option<i64>,
}

#[derive(Args, Debug)]
struct RequiredClassArgs {
    #[arg(short, value_parser = positive)]
    n: u64,
    #[arg(short, allow_negative_numbers = true)]
    i: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum DyckQuery {
    Major { word: Word },
    Descents { word: Word },
    /// The delta-orbit of a flat non-Dyck word.
    Orbit { word: Word },
    /// d-rigid / d-straightened classification of a Dyck word.
    Rigid {
        word: Word,
        #[arg(short)]
        d: u64,
    },
    /// Number of delta-orbits on flat non-Dyck words of length n.
    Classes { n: usize },
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Exponent cap for brute-force oracles, from `MODENUM_MAX_BRUTE`.
fn max_brute() -> Result<u32, CliError> {
    match std::env::var("MODENUM_MAX_BRUTE") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("MODENUM_MAX_BRUTE must be a small integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_BRUTE),
    }
}

fn run(cli: Cli) -> Result<report::Report, CliError> {
    let verify = cli.verify;
    let cap = max_brute()?;
    match cli.command {
        Command::Simplify { n, poly } => commands::simplify(&poly, n, verify),
        Command::Cyclotomic { n } => commands::cyclotomic(n, verify),
        Command::Ramanujan { n, l } => commands::ramanujan(n, l, verify),
        Command::GrepInvariant { n, poly, compare } => commands::grep_invariant(&poly, n, compare.as_ref(), verify),
        Command::Crt { n, residues } => commands::crt(n, &residues, verify),
        Command::Qmultinomial { j, k, class } => commands::qmultinomial(j, k, class.n, class.i, verify),
        Command::Qcatalan { j, n } => commands::qcatalan(j, n, verify, cap),
        Command::Catalan { j, class } => commands::catalan(j, class.n, class.i, verify, cap),
        Command::Subsetsum { j, class } => commands::subsetsum(j, class.n, class.i, verify, cap),
        Command::Dyck { query } => match query {
            DyckQuery::Major { word } => commands::dyck_major(&word),
            DyckQuery::Descents { word } => commands::dyck_descents(&word),
            DyckQuery::Orbit { word } => commands::dyck_orbit(&word, verify),
            DyckQuery::Rigid { word, d } => commands::dyck_rigid(&word, d),
            DyckQuery::Classes { n } => commands::dyck_classes(n, cap),
        },
        Command::Sweep { seed, cases } => sweep::run(seed, cases, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            report.print(json);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Mismatch { report: Some(r), .. } = &e {
                r.print(json);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
