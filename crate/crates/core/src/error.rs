use thiserror::Error;

/// Errors reported by the library. Cell indices are 1-based.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("complex has no cells")]
    EmptyComplex,

    #[error("cell {index}: filtration value {value} is not finite")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("cell {index}: filtration value {value} is below the previous value {previous}")]
    NonMonotone {
        index: usize,
        value: f64,
        previous: f64,
    },

    #[error("cell {index}: boundary references cell {face}, which does not precede it")]
    FaceAfterCoface { index: usize, face: usize },

    #[error("cell {index} (dim {dim}): boundary term {face} has dim {face_dim}")]
    DimensionMismatch {
        index: usize,
        dim: usize,
        face: usize,
        face_dim: usize,
    },

    #[error("cell {index}: boundary of the boundary is nonzero")]
    BoundaryNotCycle { index: usize },

    #[error("point cloud is empty")]
    EmptyPointCloud,

    #[error("point {index}: {message}")]
    BadPoint { index: usize, message: String },

    #[error("complex would have {cells} cells, above the limit of {limit}")]
    TooLarge { cells: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unavailable: {0}")]
    Unavailable(String),

    #[error("barcodes disagree: {0}")]
    Mismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
