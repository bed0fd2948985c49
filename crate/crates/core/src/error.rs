use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("vertex count {0} is odd")]
    OddVertexCount(usize),
    #[error("cubic graphs need an even vertex count, got {0}")]
    OddN(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("coloring is not a bisection: {ones} vertices colored 1, {twos} colored 2")]
    NotBisection { ones: usize, twos: usize },
    #[error("graph has {n} vertices, above the limit of {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("arc {arc} has lower bound above its upper bound")]
    BadBounds { arc: usize },
    #[error("alpha = {0} is outside [0, 3)")]
    AlphaOutOfRange(String),
    #[error("invalid flow point: {0}")]
    BadFlowPoint(String),
    #[error("object does not match the graph: {0}")]
    MismatchedGraph(String),
    #[error("trace is undefined for alpha >= 1")]
    UndefinedTrace,
    #[error("bisection is not orientable")]
    NotOrientable,
    #[error("region has no point with alpha < 1")]
    EmptyBelowOne,
    #[error("k = {0} is not an integer >= 3")]
    BadK(i64),
    #[error("unknown conjecture tag {0:?}")]
    UnknownConjecture(String),
    #[error("factor is inconsistent with the graph: {0}")]
    Inconsistent(String),
    #[error("factor violates its defining conditions: {0}")]
    FactorInvalid(String),
    #[error("structure violation during coloring: {0}")]
    StructureViolation(String),
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
