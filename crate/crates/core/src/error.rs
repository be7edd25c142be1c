use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("invalid clique cover: {0}")]
    InvalidCover(String),
    #[error("invalid parameters for {family}: {msg}")]
    InvalidParameters { family: String, msg: String },
    #[error("operation requires a nonempty graph")]
    NullGraph,
    #[error("graph of order {order} exceeds the limit of {limit} vertices for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("negative coefficient at x^{0}")]
    NegativeCoefficient(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} of the independence polynomial exceeds cover size {q}")]
    DegreeExceedsCover { degree: usize, q: usize },
    #[error("interval ({lo}, {hi}] does not isolate exactly one root (contains {count})")]
    NotIsolating { lo: String, hi: String, count: usize },
    #[error("coefficient window has an internal zero at x^{0}")]
    InternalZero(usize),
    #[error("{0}")]
    Parse(String),
}
