use thiserror::Error;

/// Errors raised by multirelation construction and the operations on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("universe of size {0} exceeds the maximum of 16 elements")]
    UniverseTooLarge(usize),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("state set does not fit universe of size {0}")]
    StateSetTooWide(usize),
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("argument is not a sequential subidentity")]
    NotSubidentity,
    #[error("malformed multirelation literal: {0}")]
    Literal(String),
    #[error("malformed multirelation json: {0}")]
    Json(String),
}
