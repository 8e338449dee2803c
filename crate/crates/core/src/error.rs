use thiserror::Error;

use crate::rootsys::CartanType;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {kind}{rank}")]
    InvalidType { kind: CartanType, rank: usize },
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector {0:?} is not a positive root")]
    NotPositiveRoot(Vec<i32>),
    #[error("element of length {length} exceeds the reduced-word guard {guard}")]
    TooLong { length: usize, guard: usize },
    #[error("operation requires type A, got {0}")]
    TypeMismatch(String),
    #[error("element is not a minimal coset representative for {0}")]
    NotMinimalRep(String),
    #[error("{subset} is not contained in the left descent set {descents}")]
    NotDescentSubset { subset: String, descents: String },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("word {0} does not give a wonderful G-BSDH variety")]
    NotWonderful(String),
    #[error("bad parabolic subsets: {0}")]
    BadSubsets(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("smoothness undecidable in type {0}")]
    Undecidable(String),
    #[error("group of order {order} exceeds cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
