use thiserror::Error;

use crate::group::{GroupError, GroupSpec};
use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("table is not normalized at {0}")]
    NotNormalized(String),
    #[error("value must satisfy v^{expected} = 1")]
    OrderMismatch { expected: u32 },
    #[error("expected a table on {expected}, found {found}")]
    WrongGroup { expected: String, found: GroupSpec },
    #[error("malformed cocycle: {0}")]
    MalformedCocycle(String),
    #[error("table fails the cocycle condition ({violations} violations)")]
    NotCocycle { violations: usize },
    #[error("search space has {required} candidates, over the limit of {limit}; raise the limit to at least {required}")]
    LimitExceeded { required: u128, limit: u64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
