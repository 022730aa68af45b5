use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("{what} is not integral: {value}")]
    NonIntegral { what: String, value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree mismatch: expected total degree {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("computation exceeds supported scale: {0}")]
    ScaleExceeded(String),

    #[error("maps are not composable: {0}")]
    NotComposable(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
