use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("labels do not form a bijection onto 1..={0}")]
    NotABijection(usize),
    #[error("numbering covers {numbering} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, numbering: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bandwidth cannot be reduced: the graph has no edges")]
    NotReducible,
    #[error("graph has {vertex_count} vertices, more than the limit of {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
