use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of variables {0} outside supported range 1..=16")]
    UnsupportedVarCount(usize),
    #[error("point {point} out of range for {n_vars} variables")]
    PointOutOfRange { point: u32, n_vars: usize },
    #[error("size mismatch: expected {expected} variables, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("function is not bent")]
    NotBent,
    #[error("matrix is singular over GF(2)")]
    SingularMatrix,
    #[error("map is not a permutation")]
    NotPermutation,
    #[error("map is not injective")]
    NotInjective,
    #[error("images of the two maps overlap")]
    ImagesOverlap,
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64, nodes_explored: u64 },
    #[error("sampling budget exhausted after {sampled} candidates")]
    BudgetExhausted { sampled: u64 },
    #[error("no pair (a, b) with nonzero second derivative")]
    NoSuchPair,
    #[error("no candidate in the pool has a unique maximal M-subspace")]
    PoolExhausted,
    #[error("function does not have a unique {dim}-dimensional M-subspace (found {count})")]
    NotUniqueSubspace { dim: usize, count: usize },
    #[error("linear map sends the unique M-subspace onto itself")]
    SubspacePreserved,
    #[error("premise violated: {0}")]
    PremiseViolated(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("structural verdict disagrees with direct search: {0}")]
    CrossCheckFailed(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
