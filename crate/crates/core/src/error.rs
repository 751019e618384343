use thiserror::Error;

/// Errors raised by the constructors, engines, oracles and sequence tools.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("m = {m} and r = {r} are not coprime")]
    NotCoprime { m: u64, r: u64 },

    #[error("boundary sequences have different lengths ({a} vs {b})")]
    LengthMismatch { a: usize, b: usize },

    #[error("boundary sequence `{which}` decreases at position {index}")]
    NotNondecreasing { which: char, index: usize },

    #[error("upper boundary below lower boundary at position {index}")]
    CrossedBoundary { index: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix is not normalized upper Hessenberg")]
    NotHessenberg,

    #[error("zero pivot at row {0}")]
    ZeroPivot(usize),

    #[error("partition sum is not an integer: {0}")]
    NonIntegerResult(String),

    #[error("empty boundary has no path endpoint")]
    EmptyBoundary,

    #[error("oracle route limited to m*n <= {limit} (requested {requested})")]
    CostGuard { limit: u64, requested: u64 },

    #[error("malformed b-file line {0}")]
    MalformedLine(usize),

    #[error("non-contiguous b-file index at line {0}")]
    NonContiguousIndex(usize),

    #[error("sequence range and b-file do not overlap")]
    EmptyOverlap,

    #[error("cannot parse number `{0}`")]
    ParseNumber(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
