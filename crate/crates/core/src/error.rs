use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph construction failed: loop, repeated edge or vertex out of range.
    InvalidGraph(String),
    /// The rotation system does not describe an embedding of the graph.
    MalformedEmbedding(String),
    /// Operation needs a connected graph.
    Disconnected,
    /// Caller broke a documented precondition.
    Precondition(String),
    /// Exhaustive search hit its node limit before reaching an answer.
    BudgetExceeded { limit: u64 },
    /// A step that the counting arguments guarantee came out empty.
    /// Always a bug, never a property of the input.
    Defect(String),
    /// Unknown generator family or bad parameters.
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGraph(m) => write!(f, "invalid graph: {m}"),
            Error::MalformedEmbedding(m) => write!(f, "malformed embedding: {m}"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::BudgetExceeded { limit } => write!(f, "search budget of {limit} nodes exceeded"),
            Error::Defect(m) => write!(f, "internal defect: {m}"),
            Error::Usage(m) => write!(f, "usage: {m}"),
        }
    }
}

impl core::error::Error for Error {}
