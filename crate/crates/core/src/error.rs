use thiserror::Error;

use crate::instance::SubsetId;

/// Errors raised by instance construction, the solvers and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("instance must contain at least one subset")]
    NoSubsets,
    #[error("element {element} out of range for universe of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("subset id {id} out of range (m = {m})")]
    UnknownSubset { id: usize, m: usize },
    #[error("vertex {vertex} out of range ({count} vertices)")]
    UnknownVertex { vertex: usize, count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is only defined between distinct subsets (got {0} twice)")]
    SameSubset(SubsetId),
    #[error("auxiliary graph is disconnected")]
    Disconnected,
    #[error("subsets do not cover the universe ({uncovered} element(s) uncovered)")]
    InfeasibleCover { uncovered: usize },
    #[error("selection must be nonempty")]
    EmptySelection,
    #[error("target {0} already belongs to the selection")]
    TargetInSelection(SubsetId),
    #[error("no candidate paths to select from")]
    NoCandidates,
    #[error("no relay subset can make progress toward uncovered elements")]
    RelayStuck,
    #[error("{what} = {got} exceeds the oracle cap of {cap}")]
    OracleLimit { what: &'static str, got: usize, cap: usize },
    #[error("oracle limits must be positive")]
    InvalidLimits,
    #[error("search cancelled")]
    Cancelled,
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("trace does not match instance: {0}")]
    TraceMismatch(String),
    #[error("unknown fixture `{name}` (expected one of: {valid})")]
    UnknownFixture { name: String, valid: String },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
