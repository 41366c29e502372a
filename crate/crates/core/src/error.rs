use thiserror::Error;

/// Errors produced by the numerical routines and the file readers.
#[derive(Debug, Error)]
pub enum QsdError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("matrix is not Hermitian (asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("operator is not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPositive(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("skewing parameter {0} outside [1e-12, 1 - 1e-12]")]
    InvalidSkew(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl QsdError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        QsdError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, QsdError>;
