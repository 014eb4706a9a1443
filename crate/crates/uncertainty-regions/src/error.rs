use std::path::PathBuf;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An observable and a state of different Hilbert-space dimensions were combined.
    #[error("dimension mismatch: observable is {observable}-dimensional, state is {state}-dimensional")]
    DimensionMismatch { observable: usize, state: usize },

    /// A value violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A construction violated a type invariant.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// A parameter combination admits no valid quantum state.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An envelope comparison had no usable bins.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn infeasible(msg: impl Into<String>) -> Self {
        Error::Infeasible(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
