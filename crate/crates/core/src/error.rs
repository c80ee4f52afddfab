use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("generator list is empty (zeros are ignored)")]
    EmptyInput,
    #[error("generators have gcd {gcd}, not 1; they do not generate a numerical semigroup")]
    GcdNotOne { gcd: BigUint },
    #[error("modulus must be a positive element of the semigroup")]
    ZeroModulus,
    #[error("{value} is not an element of the semigroup")]
    NotMember { value: BigUint },
    #[error("modulus {modulus} is too large for a residue table")]
    ModulusTooLarge { modulus: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThabitError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("coefficient sequence has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("coefficient digit {digit} is outside {{0, 1, 2}}")]
    InvalidDigit { digit: u8 },
    #[error("outside the formula's domain: {0}")]
    DomainError(String),
    #[error("closed form is internally inconsistent: {0}")]
    InternalInconsistency(String),
}
