use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..={max}", max = crate::graph::MAX_VERTICES)]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("arithmetic overflow in exact walk count (length {length})")]
    Overflow { length: usize },

    #[error("walk length {got} exceeds the supported maximum {max}")]
    OrderTooLarge { got: usize, max: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },

    #[error("construction is not outerplanar: {0}")]
    NotOuterplanar(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("matrix is not symmetric (entry ({row},{col}) differs by {diff:e})")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("eigensolver did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("eigenvalue index {k} is not simple: neighbouring gap {gap:e}")]
    NotSimple { k: usize, gap: f64 },

    #[error("eigenvector entry at hub is degenerate ({0:e})")]
    DegenerateRatio(f64),

    #[error("hubs {0} and {1} are not symmetric")]
    AsymmetricHubs(usize, usize),

    #[error("no sign change of the characteristic function on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("series has non-positive leading coefficient")]
    NonPositiveLeading,

    #[error("discriminant series is not a square: {0}")]
    BadDiscriminant(String),

    #[error("validity intervals are disjoint")]
    DisjointIntervals,

    #[error("empty search family: {0}")]
    EmptyFamily(String),

    #[error("resource cap exceeded at level {level}; resume from parent {next_parent}")]
    Partial { level: usize, next_parent: usize },

    #[error("i/o: {0}")]
    Io(String),

    #[error("config: {0}")]
    Config(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
