use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point at positions {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },
    #[error("{labels} labels given for {points} points")]
    LabelMismatch { points: usize, labels: usize },
    #[error("configuration has no points")]
    EmptyConfiguration,
    #[error("unknown configuration family `{0}`")]
    UnknownFamily(String),
    #[error("convex hull of an empty block")]
    EmptyBlock,
    #[error("point index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ground set sizes differ ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset is not rank-symmetric")]
    NotRankSymmetric,
    #[error("partition is not noncrossing for this configuration")]
    NotNoncrossing,
    #[error("elements are not comparable in the given order")]
    NotComparable,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("assembly failure: {0}")]
    AssemblyFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
