use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension {0} exceeds the supported maximum of 1024")]
    TooLarge(usize),

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("state is not normalized (norm^2 = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("not a density matrix: {0}")]
    InvalidDensity(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("state is not permutation symmetric")]
    NotSymmetric,

    #[error("expected a {expected}-qubit state, got {actual} qubits")]
    WrongQubitCount { expected: usize, actual: usize },

    #[error("root finder did not converge: {0}")]
    RootFinding(String),

    #[error("invalid bipartition: {0}")]
    InvalidCut(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
