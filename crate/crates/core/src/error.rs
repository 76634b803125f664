use thiserror::Error;

/// Errors produced by the algebra, model and solver layers.
///
/// Decoder *failures* (rank test rejected, zero denominator, verification
/// mismatch) are not errors; they are reported through
/// [`DecodeOutcome::Fail`](crate::glz::DecodeOutcome).
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("duplicate interpolation abscissa")]
    DuplicateAbscissa,

    #[error("only {available} usable evaluation points in the field, {needed} needed")]
    InsufficientPoints { available: usize, needed: usize },

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("retry budget of {budget} exhausted while {what}")]
    RetryBudget { budget: usize, what: &'static str },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
