use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0} (simple graphs only)")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("{what}: order {order} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    /// Exact core search refused; carries the best core found by vertex peeling
    /// and the structor-index lower bound for the chromatic number.
    #[error(
        "core search: component of order {order} exceeds search limit {limit} \
         (best known si {best_si}, lower bound {lower_bound})"
    )]
    CoreSearchTooLarge {
        order: usize,
        limit: usize,
        best_si: usize,
        lower_bound: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Capability errors are limits of the exact solvers, not bad input.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::CoreSearchTooLarge { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
