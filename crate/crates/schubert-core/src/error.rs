use thiserror::Error;

/// Errors raised by the computational core.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system `{0}`")]
    InvalidType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("unknown Weyl group element `{0}`")]
    UnknownCell(String),
    #[error("Weyl group of {0} has too many elements to enumerate")]
    TooLarge(String),
    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("division is not exact")]
    NotDivisible,
    #[error("expansion could not be triangularised: {0}")]
    Structural(String),
    #[error("non-integral expansion coefficient at {0}")]
    NonIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("identity check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;
