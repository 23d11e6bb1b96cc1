use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} not permitted")]
    SelfLoop { vertex: usize },
    #[error("parallel edge {u} -> {v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("need at least {needed} edge(s), found {found}")]
    TooFewEdges { needed: usize, found: usize },
    #[error("graph is not (strongly) connected: no path from {from} to {to}")]
    Disconnected { from: usize, to: usize },
    #[error("input is a directed cycle; its line graph has metric dimension 1")]
    DirectedCycle,
    #[error("{n} vertices exceed the exact-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("input is not a tree")]
    NotATree,
    #[error("input is a path; tree parameters are undefined (metric dimension is 1)")]
    PathInput,
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("landmark set must be nonempty")]
    EmptyLandmarks,
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownLabel(_) | Error::Io(_) => 2,
            Error::Disconnected { .. } => 3,
            Error::CapExceeded { .. } => 4,
            _ => 1,
        }
    }
}
