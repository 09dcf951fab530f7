use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("constant term is not invertible in the coefficient ring")]
    NotInvertible,
    #[error("series exponential needs a zero constant term")]
    NonZeroConstantTerm,
    #[error("coefficient {requested} requested beyond series order {order}")]
    BeyondOrder { requested: usize, order: usize },
    #[error("operation needs a finite truncation order")]
    UnboundedOrder,
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("class functions live on different groups: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("evaluation hits a pole of the rational function")]
    Pole,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
