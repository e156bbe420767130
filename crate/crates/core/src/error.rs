use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} has endpoint {vertex} outside 0..{n}")]
    EndpointOutOfRange { edge: EdgeId, vertex: Vertex, n: usize },
    #[error("edge id {edge} out of range (graph has {m} edges)")]
    InvalidEdge { edge: EdgeId, m: usize },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("cannot contract loop edge {0}")]
    ContractLoop(EdgeId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("partial orientation contains a directed cycle")]
    NotAcyclic,
    #[error("partial orientation contains a directed cut")]
    NotStronglyConnected,
    #[error("graph has a loop (edge {0})")]
    HasLoop(EdgeId),
    #[error("graph has a bridge (edge {0})")]
    HasBridge(EdgeId),
    #[error("no strongly connected completion found")]
    ExtensionFailed,

    #[error("vertex set is not a directed cut of the orientation")]
    NotDirectedCut,
    #[error("edge sequence is not a directed cycle of the orientation")]
    NotDirectedCycle,
    #[error("edge pivot precondition violated: {0}")]
    InvalidPivot(&'static str),
    #[error("not a half-open path of the orientation: {0}")]
    InvalidPath(&'static str),
    #[error("orientations have different indegree sequences")]
    IndegreeMismatch,
    #[error("orientations are not related by the requested moves")]
    NoDecomposition,
    #[error("invalid reference pair: {0}")]
    InvalidPair(&'static str),

    #[error("enumeration guard exceeded: m = {m} > {limit}")]
    EnumerationGuard { m: usize, limit: usize },
    #[error("cut witnesses are scanned over vertex subsets: n = {n} > {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("move set is empty")]
    EmptyMoveSet,
    #[error("k must be positive")]
    ZeroK,
    #[error("no closed formula for class {0}")]
    UnsupportedClass(&'static str),
    #[error("probability {0} outside the admissible range")]
    ProbabilityOutOfRange(String),
    #[error("trial count must be positive")]
    ZeroTrials,
    #[error("formula evaluated to the non-integer {0}")]
    NonIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
}
