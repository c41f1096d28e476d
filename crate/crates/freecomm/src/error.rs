//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the exact and combinatorial layers.
#[derive(Debug, Error)]
pub enum Error {
    /// The input violates a precondition (wrong shape, crossing partition,
    /// malformed text, ...). Maps to CLI exit code 2.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The request is well-formed but exceeds a configured enumeration or
    /// expansion bound. Maps to CLI exit code 3.
    #[error("resource bound exceeded: {0}")]
    Bound(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn bound(msg: impl Into<String>) -> Self {
        Error::Bound(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
