use alloc::string::String;

/// Everything that can go wrong inside the numerics core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (relative defect {defect:e} > {tol:e})")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error("density matrix invariant violated: {0}")]
    InvalidState(String),

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("invalid spin: 2j = {0} (need 2j >= 1)")]
    InvalidSpin(usize),

    #[error("invalid Fock cutoff {0} (need cutoff >= 2)")]
    InvalidCutoff(usize),

    #[error("invalid random spec: {0}")]
    InvalidSpec(String),

    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    #[error("vector is not orthogonal to the support of the state (residual {residual:e} > {tol:e})")]
    NotOrthogonal { residual: f64, tol: f64 },

    #[error("information operator is degenerate on this state (<O'O> = {norm:e} <= {tol:e})")]
    DegenerateInformationOperator { norm: f64, tol: f64 },

    #[error("operator basis is empty")]
    EmptyBasis,

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: (usize, usize), found: (usize, usize)) -> Self {
        Error::DimensionMismatch {
            expected: alloc::format!("{}x{}", expected.0, expected.1),
            found: alloc::format!("{}x{}", found.0, found.1),
        }
    }
}
