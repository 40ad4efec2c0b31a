use thiserror::Error;

/// Errors produced by the core analyses.
#[derive(Debug, Error)]
pub enum LcsError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a subalgebra: bracket closure residual {residual:.3e}")]
    NotSubalgebra { residual: f64 },

    #[error("not a derivation: Leibniz residual {residual:.3e}")]
    NotDerivation { residual: f64 },

    #[error("matrix logarithm out of domain: {0}")]
    LogOutOfDomain(String),

    #[error("spectral defect: {0}")]
    SpectralDefect(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("integration failure: {0}")]
    IntegrationFailure(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, LcsError>;
