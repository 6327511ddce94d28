use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus is not monic (leading coefficient {0})")]
    NonMonicModulus(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// A division that is exact in theory left a remainder. This is a bug.
    #[error("inexact polynomial division, remainder {0}")]
    InexactDivision(String),

    #[error("polynomial has non-integral coefficients (common denominator {0})")]
    NonIntegralInput(String),

    /// A closed form that must produce an integer did not. This is a bug.
    #[error("expected an integer result, got {0}")]
    NonIntegerResult(String),

    #[error("residue system for n = {n} must cover exactly the divisors of n")]
    IncompleteResidueSystem { n: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operation needs a nonempty word")]
    EmptyWord,

    #[error("word {0} is not flat and non-Dyck")]
    NotFlatNonDyck(String),

    #[error("word length {len} is not divisible by {d}")]
    LengthNotDivisible { len: usize, d: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}
