use thiserror::Error;

use crate::arith::ArithError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("mixed ring tags: expected {expected}, found {found}")]
    RingMismatch { expected: &'static str, found: &'static str },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("saturation defined over Z only")]
    SaturationRing,
    #[error("input rows must be independent")]
    DependentRows,
    #[error("reduction parameter must lie in (1/4, 1], got {0}")]
    BadDelta(String),
    #[error("no S3 action on nonsymmetric basis {0}")]
    NoSymmetricAction(&'static str),
    #[error("wrong space: expected {expected}, found {found}")]
    WrongSpace { expected: String, found: &'static str },
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
