use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands have incompatible orders.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A parameter violates a precondition (wrong congruence class, not prime, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// An input object fails a structural invariant it was required to satisfy.
    #[error("validation failed: {0}")]
    Validation(String),
    /// Malformed PM/QUH text.
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
