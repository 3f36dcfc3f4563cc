use thiserror::Error;

/// Errors raised by the library. Identity failures are never errors; they are
/// carried as data in [`crate::report::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(i64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("{name} = {value} is out of range: {requirement}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        requirement: &'static str,
    },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
