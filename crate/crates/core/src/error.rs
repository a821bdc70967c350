use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("truth value {0} is outside [0, 1]")]
    OutOfRange(String),

    #[error("invalid chain: n = {0}, need n >= 2")]
    InvalidChain(usize),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
