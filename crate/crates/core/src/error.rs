//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by construction, validation, and solver routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("matrix is not unitary (deviation {deviation:.3e} exceeds tolerance {tolerance:.3e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    #[error("Kraus completeness violated (deviation {deviation:.3e} exceeds tolerance {tolerance:.3e})")]
    NotCompletenessPreserving { deviation: f64, tolerance: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("linear program error: {0}")]
    LinearProgram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
