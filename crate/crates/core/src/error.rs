//! Crate-wide error type.

use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not reversible: {0}")]
    NotReversible(String),
    #[error("singular linearization at q-degree {degree}")]
    SingularEquation { degree: usize },
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("outside theorem domain: {0}")]
    TheoremDomain(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("frame error: {0}")]
    Frame(String),
    #[error("resonance: {0}")]
    Resonance(String),
    #[error("missing dependency: {0}")]
    Dependency(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
