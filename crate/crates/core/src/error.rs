use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph_core::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("empty graph (0 vertices) is not accepted")]
    EmptyGraph,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown graph name {0:?}")]
    UnknownGraph(String),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    #[error("certificate: {0}")]
    Certificate(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
