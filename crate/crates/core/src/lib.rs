//! Modular enumeration: remainders of generating functions modulo `x^n - 1`
//! computed from their residues modulo cyclotomic polynomials.
//!
//! All arithmetic is exact over arbitrary-precision rationals.
//!
//! ```
//! use modenum_core::subset_sum::{subset_sum_class, SubsetSumQuery};
//!
//! // subsets of {1, ..., 22} whose sum is 5 mod 12
//! let count = subset_sum_class(SubsetSumQuery { n: 12, j: 22, i: 5 }).unwrap();
//! assert_eq!(count.to_string(), "349504");
//! ```

pub mod dyck;
pub mod error;
pub mod modular;
pub mod number_theory;
pub mod poly;
pub mod qcomb;
pub mod subset_sum;
pub mod table;

pub use dyck::{Word, WordKind};
pub use error::{Error, Result};
pub use modular::{
    canonical_rep, crt_combine, g_coeff, g_poly, invariant_equal, simplify_class_from_residues,
    simplify_from_residues, ResidueSystem,
};
pub use number_theory::{cyclotomic, divisors, euler_phi, moebius, ramanujan, DivisorList};
pub use poly::{Degree, IntegralityWitness, Polynomial, Rational};
pub use qcomb::{CatalanQuery, MultiIndex};
pub use subset_sum::SubsetSumQuery;
pub use table::{CountTable, Provenance};
