use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {0} vertices, more than the supported {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("malformed rotation system: {0}")]
    Rotation(String),
    #[error("bondage search exhausted its budget of {budget} edges without increasing the domination number")]
    BondageBudgetExhausted { budget: usize },
    #[error("rotation enumeration needs {needed} evaluations, budget is {budget}")]
    RotationBudgetExceeded {
        needed: u128,
        budget: u128,
        best_found: Option<i64>,
    },
    #[error("euler characteristic {chi} outside the allowed range ({allowed})")]
    ChiOutOfRange { chi: i64, allowed: &'static str },
    #[error("invalid girth: {0}")]
    InvalidGirth(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
