//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside an operation's mathematical domain (pole, zero contrast,
    /// point off the allowed interval).
    #[error("domain error: {0}")]
    Domain(String),
    /// Structurally invalid input (bad sample count, missing moment, empty
    /// grid).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Requested variant is not provided (e.g. closed-form moment for n > 2).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Root finding failed to produce a certified resonance.
    #[error("solver failure: {0}")]
    Solver(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
