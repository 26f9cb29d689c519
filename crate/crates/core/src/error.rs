use thiserror::Error;

/// Errors produced by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid norm spec: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("epsilon {0} outside the admissible range {1}")]
    EpsilonOutOfRange(f64, &'static str),

    #[error("relation `{0}` requires an inner-product norm")]
    NotInnerProduct(&'static str),

    #[error("{0} did not converge")]
    NonConvergence(&'static str),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
