use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad spectrum, out-of-range letter, mismatched
    /// partition weights, and the like.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A size, memory, or complexity guard was hit. The computation is
    /// well-defined but outside the supported desk-scale envelope.
    #[error("resource guard: {0}")]
    Guard(String),

    /// The bialternant Schur evaluator was asked for a spectrum with
    /// coincident eigenvalues; callers fall back to the default route.
    #[error("degenerate spectrum: coincident eigenvalues in bialternant evaluation")]
    DegenerateSpectrum,

    /// Operation restricted to a specific local dimension (the coupled-basis
    /// concentration path only supports qubits).
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn guard(msg: impl Into<String>) -> Self {
        Error::Guard(msg.into())
    }
}
