use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair ({0}, {1}) given more than once")]
    DuplicateEdge(usize, usize),
    #[error("drawing has {points} points but the graph has {vertices} vertices")]
    PointCount { points: usize, vertices: usize },
    #[error("point {vertex} has {got} coordinates, expected {expected}")]
    Dimension { vertex: usize, got: usize, expected: usize },
    #[error("drawing dimension must be at least 1")]
    ZeroDimension,
    #[error("ordering is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("invalid clustering: {0}")]
    InvalidClustering(String),
    #[error("ordering violates the line conditions at vertex {vertex}")]
    OrderingViolatesConditions { vertex: usize },
    #[error("ordering passes the line conditions but no positions realise it")]
    OrderingNotRealizable,
    #[error("graph is not complete: pair ({0}, {1}) has no edge")]
    NotComplete(usize, usize),
    #[error("graph has {n} vertices, above the oracle bound {bound}; pass an explicit limit")]
    OracleTooLarge { n: usize, bound: usize },
    #[error("oracle search limit of {0} expanded prefixes reached")]
    OracleLimitReached(u64),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("graph has a valid line drawing, so it cannot be minimal non-drawable")]
    Drawable,
    #[error("duplicate vertex {0} in witness list")]
    DuplicateWitnessVertex(usize),
    #[error("witness list must have even, nonzero length (got {0})")]
    WitnessLength(usize),
    #[error("drawing is not valid")]
    InvalidDrawing,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
