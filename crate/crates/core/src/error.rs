//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by simulation components.
#[derive(Debug, Error)]
pub enum Error {
    /// Two vectors (or a vector and a model) disagree on dimension.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An operation received an invalid parameter value.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A configuration is structurally or semantically invalid.
    /// `path` points at the offending field (dot-separated).
    #[error("config error at `{path}`: {reason}")]
    Config { path: String, reason: String },

    /// A data file could not be parsed. Lines are 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A dataset or batch violates an invariant (e.g. label out of range).
    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid_parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub fn config(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
