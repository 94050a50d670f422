use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error(
        "eigensolver did not converge for dimension {dim} (off-diagonal residual {residual:e})"
    )]
    NoConvergence { dim: usize, residual: f64 },

    #[error("no strictly feasible start available and phase-I failed")]
    MissingStart,

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("block matrix is not positive semidefinite (min eigenvalue {min_eig:e})")]
    NotFeasible { min_eig: f64 },

    #[error("off-diagonal block has mass {mass:e} on the kernel of the diagonal block")]
    InconsistentKernel { mass: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}
