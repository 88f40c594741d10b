use thiserror::Error;

use crate::digraph::{ArcId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not a vertex of the graph")]
    InvalidVertex(VertexId),
    #[error("arc {0} is not an arc of the graph")]
    InvalidArc(ArcId),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("vertex set must not be empty")]
    EmptyVertexSet,

    #[error("an empty arc set has no root; pass the root explicitly")]
    EmptyTree,
    #[error("vertex {0} has in-degree at least 2")]
    InDegree(VertexId),
    #[error("arc set is not weakly connected")]
    Disconnected,
    #[error("arc set contains a cycle")]
    Cycle,
    #[error("directed path has more than one leaf arc")]
    NotAPath,
    #[error("arc set is not a spanning tree of the graph")]
    NotSpanning,
    #[error("forest roots {found:?} do not match the required root set {expected:?}")]
    RootSetMismatch {
        expected: Vec<VertexId>,
        found: Vec<VertexId>,
    },

    #[error("roots differ: {0} vs {1}")]
    RootMismatch(VertexId, VertexId),
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("source and target are equal")]
    Identical,
    #[error("vertex {0} has no directed tree of the required size")]
    NoRootedTree(VertexId),
    #[error("arc {0} is not incident to the root of the tree")]
    NotIncidentToRoot(ArcId),
    #[error("trees of size 0 cannot be exchanged")]
    ZeroSize,
    #[error("no reconfiguration sequence exists")]
    Unreachable,

    #[error("path instances require a graph without parallel arcs")]
    ParallelArcs,
    #[error("vertex set is not a feedback vertex set")]
    NotFeedbackVertexSet,
    #[error("arc set is not a feedback arc set")]
    NotFeedbackArcSet,
    #[error("set is not a member of the family")]
    NotMember,

    #[error("state-space guard exceeded ({0} states)")]
    GuardExceeded(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
