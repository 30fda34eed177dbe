//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by library operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Matrix shapes do not compose for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation produced a NaN or infinite value.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// Training aborted because the loss or a gradient left the finite range.
    #[error("training diverged at epoch {epoch}: {quantity} is non-finite")]
    Diverged { epoch: usize, quantity: String },

    /// Malformed CSV or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Filesystem failure wrapped with the offending path.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
