use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("node {node} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("graph has no edges, modularity is undefined")]
    NoEdges,

    #[error("self-loop on node {0} is not supported here")]
    SelfLoop(usize),

    #[error("partition covers {got} nodes, graph has {expected}")]
    PartitionSize { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("community {0} is not alive")]
    DeadCommunity(usize),
}
