use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite tensor component")]
    NonFinite,
    #[error("tensor is not positive definite")]
    NotPositiveDefinite,
    #[error("determinant {0} is not positive")]
    NonPositiveDeterminant(f64),
    #[error("tensor is not orthogonal (deviation {0:e})")]
    NotOrthogonal(f64),
    #[error("argument {0} is outside the function domain")]
    OutOfDomain(f64),
    #[error("principal stretches coincide")]
    CoincidentStretches,
    #[error("singular at alpha = 0 for this spin")]
    Singular,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
