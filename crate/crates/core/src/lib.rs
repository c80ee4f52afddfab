//! Numerical semigroups and the Frobenius problem for generalized Thabit
//! numerical semigroups.
//!
//! [`oracle`] computes Apéry sets, Frobenius numbers, genera and minimal
//! generators of any numerical semigroup from its generators. [`thabit`]
//! gives the closed forms of the same quantities for `GT(n, k)`, which the
//! oracle can check point by point.

pub mod error;
pub mod oracle;
pub mod thabit;

pub use error::{OracleError, ThabitError};
pub use oracle::{AperyTable, GeneratorSet};
pub use thabit::{coeff_solve, frobenius_k2_closed, CaseTag, CoeffSeq, GtParams};
