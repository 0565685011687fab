//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("cannot parse scalar {text:?}: {reason}")]
    BadScalar { text: String, reason: String },

    #[error("operand is not idempotent: {0}")]
    NotIdempotent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation {0} requires rational coefficients")]
    RationalOnly(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
