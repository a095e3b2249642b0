//! Crate-wide error type. Domain violations are reported as values, never
//! panics, so callers (and the CLI) can surface them as structured output.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("unsupported type {family}{rank}: {reason}")]
    UnsupportedType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a root of this datum")]
    NotARoot(String),

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("non-integral result in lattice arithmetic: {0}")]
    NonIntegral(String),

    #[error("division direction must be nonzero")]
    ZeroDivisor,

    #[error("level must be positive")]
    NonPositiveLevel,

    #[error("τ must lie in the open upper half-plane")]
    NotUpperHalf,

    #[error("matrix has determinant {0}, not 1")]
    NotSl2(i64),

    #[error("truncation too small: {0}")]
    InsufficientTruncation(String),

    #[error("tail bound {bound:e} exceeds tolerance {tol:e}; raise the q-order or Im τ")]
    TailBoundExceeded { bound: f64, tol: f64 },

    #[error("graph error: {0}")]
    Graph(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
