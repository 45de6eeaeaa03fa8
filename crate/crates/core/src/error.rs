use thiserror::Error;

/// Everything that can go wrong while building graphs or running a solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric: {0} lists {1} but not the reverse")]
    AsymmetricAdjacency(usize, usize),
    #[error("graph is disconnected: a search from vertex 0 reaches {reached} of {n} vertices")]
    Disconnected { reached: usize, n: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex set is empty")]
    EmptySet,
    #[error("slice index {index} exceeds interval length {length}")]
    SliceOutOfRange { index: u32, length: u32 },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("source and target must differ (both are {0})")]
    SameEndpoints(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration budget exceeded ({scope} cap of {cap} paths)")]
    BudgetExceeded { scope: BudgetScope, cap: u64 },
    #[error("estimated {estimated} windows exceeds the window budget of {budget}")]
    WindowBudgetExceeded { estimated: u64, budget: u64 },

    #[error(
        "graph is not distance-hereditary: from root {root}, layer {layer}, vertices {u} and {v} \
         share a component but differ in their neighbors one layer up"
    )]
    NotDistanceHereditary {
        root: usize,
        layer: u32,
        u: usize,
        v: usize,
    },
    #[error("graph was asserted chordal but contains the chordless cycle {0:?}")]
    NotChordal(Vec<usize>),

    #[error("result failed independent verification: {0}")]
    InvariantViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetScope {
    PerPair,
    Global,
}

impl std::fmt::Display for BudgetScope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetScope::PerPair => f.write_str("per-pair"),
            BudgetScope::Global => f.write_str("global"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
