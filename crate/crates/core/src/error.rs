use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("graph has a directed cycle through {0:?}")]
    Cycle(Vec<String>),
    #[error("identifier `{0}` uses the reserved prefix `+`")]
    ReservedIdentifier(String),
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("invalid framing: {0}")]
    InvalidFraming(String),
    #[error("vertex `{0}` does not lie on both paths")]
    VertexNotShared(String),
    #[error("no pre-order at sink `{0}`")]
    NoPreOrderAtSink(String),
    #[error("ambiguous embedding: {0}")]
    AmbiguousEmbedding(String),
    #[error("not a flow: {0}")]
    NotAFlow(String),
    #[error("flow is not integral on edge `{0}`")]
    NotIntegral(String),
    #[error("invalid augmentation: {0}")]
    InvalidAugmentation(String),
    #[error("netflow is not conservationist: {0}")]
    NotConservationist(String),
    #[error("no layering uses only the available routes")]
    NoLayering,
    #[error("framed augmentation is not well-ordered; use the facet-pivot enumeration (maximal_simplices) instead")]
    NotWellOrdered,
    #[error("brute force guard exceeded: {count} layerings, limit {limit}; use the facet-pivot enumeration instead")]
    GuardExceeded { count: usize, limit: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
