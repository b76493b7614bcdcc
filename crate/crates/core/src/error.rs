use thiserror::Error;

pub type Result<T> = std::result::Result<T, QstsError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QstsError {
    /// Malformed input: dimension mismatch, bad qubit index, non-normalized data.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A vector with norm at or below the zero threshold was asked to be normalized.
    #[error("zero vector (norm {norm:e}); branch has zero probability")]
    ZeroVector { norm: f64 },

    /// A strategy rule divides by a vanishing channel parameter.
    #[error("degenerate channel: {0}")]
    DegenerateChannel(String),

    /// A simulated state disagrees with its reference entry.
    #[error("verification failed for row {row}: fidelity {fidelity} below 1 - {tolerance:e}")]
    Verification {
        row: String,
        fidelity: f64,
        tolerance: f64,
    },
}

impl QstsError {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        QstsError::Argument(msg.into())
    }
}
