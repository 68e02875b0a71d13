use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("order {n} exceeds the supported maximum of {max} for {what}")]
    UnsupportedOrder { n: usize, max: usize, what: &'static str },

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge {0} is not in the graph")]
    EdgeAbsent(Edge),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("subgraph is neither a single edge nor 2-connected")]
    NotABlock,

    #[error("cycle oracle cap exceeded: order {n} > cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid theta spec {lengths:?}: {reason}")]
    InvalidTheta { lengths: Vec<usize>, reason: &'static str },

    #[error("k = {k} unsupported here (expected {expected})")]
    UnsupportedK { k: usize, expected: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
