use thiserror::Error;

/// Errors produced by graph construction, parsing, counting and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop requested at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("operation requires a simple graph")]
    Multigraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {source}")]
    InputLine {
        line: u64,
        #[source]
        source: Box<Error>,
    },
    #[error("order {n} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error("no subtree satisfies the constraint")]
    EmptyFamily,
    #[error("transitivity assumption contradicted: {0}")]
    NotTransitive(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
