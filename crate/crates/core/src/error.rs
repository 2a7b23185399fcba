//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    Field(String),

    #[error("cannot parse scalar {input:?}: {reason}")]
    Scalar { input: String, reason: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("invalid group table: {0}")]
    Group(String),

    #[error("subset is not conjugation stable: conjugating {element} by {by} leaves the support")]
    NotConjugationStable { element: String, by: String },

    #[error("invalid coefficient data: {0}")]
    Coefficient(String),

    #[error("invalid Hopf algebra data: {0}")]
    Hopf(String),

    #[error("degree {degree} needs cochain dimension {dim}, above the cap of {cap}")]
    CapExceeded { degree: usize, dim: usize, cap: usize },

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeCap { degree: usize, max: usize },

    #[error("operation would produce a cochain of negative degree")]
    NegativeDegree,

    #[error("cochain of degree {degree} leaves the equivariant subcomplex")]
    ClosureViolation { degree: usize },

    #[error("malformed expression: {0}")]
    Expression(String),

    #[error("{message} (at {pointer})")]
    Config { pointer: String, message: String },

    #[error("{0}")]
    Scope(String),
}

impl Error {
    pub(crate) fn dim(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::Dimension {
            context: context.into(),
            expected,
            found,
        }
    }

    pub(crate) fn config(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}
