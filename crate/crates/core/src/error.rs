use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension {dim} exceeds budget {budget}")]
    Budget { dim: u128, budget: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("digit {digit} at position {position} is out of range for d = {d}")]
    DigitOutOfRange {
        digit: usize,
        position: usize,
        d: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("state is not normalized (norm {norm})")]
    Unnormalized { norm: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("malformed data: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
