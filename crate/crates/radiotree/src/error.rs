use thiserror::Error;

use crate::bounds::CertificationFailure;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("bad edge ({u}, {v}): {reason}")]
    BadEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },
    #[error("vertex ids are not contiguous: id {0} is never used")]
    SparseIds(usize),
    #[error("vertex {vertex} is out of range for a tree on {p} vertices")]
    BadVertex { vertex: usize, p: usize },
    #[error("diameter {0} is below 2")]
    DiameterTooSmall(usize),
    #[error("tree is not a two-branch tree ({0} branches)")]
    NotTwoBranch(usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("a-sequence value {value} at position {position} is outside {{0, {centers}}}")]
    InfeasibleASequence {
        position: usize,
        value: i64,
        centers: usize,
    },
    #[error("label recurrence reaches {value} at order position {position}")]
    NegativeLabel { position: usize, value: i64 },
    #[error("vertex {0} has no label")]
    MissingLabel(usize),
    #[error("label {label} is used by vertices {u} and {v}")]
    DuplicateLabel { label: u64, u: usize, v: usize },
    #[error("not a valid comparison frame: {0}")]
    NotOmegaTree(String),
    #[error("half diameter {0} is below 2")]
    DHalfTooSmall(usize),
    #[error("tree has {p} vertices, above the solver limit of {max}")]
    OrderTooLarge { p: usize, max: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),
    #[error("proof order does not certify: {0}")]
    InvalidProofOrder(CertificationFailure),
    #[error("no two-branch tree found after {0} attempts")]
    ExhaustedAttempts(usize),
    #[error("parameters outside the formula's range: {0}")]
    OutOfRange(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
