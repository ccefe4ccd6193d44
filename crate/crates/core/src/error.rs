use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid row: {0}")]
    InvalidRow(String),

    #[error("hypergraph is not full: vertices {0:?} lie in no hyperedge")]
    NotFull(Vec<usize>),

    #[error("row kind {found} where {expected} is required")]
    WrongKind { expected: char, found: char },

    #[error("expansion of {size} members exceeds the limit of {limit}")]
    TooLarge { size: String, limit: u64 },

    #[error("vertex {0} is not in the given set")]
    NotAMember(usize),

    #[error("isolated vertex {0}: the graph has no perfect matching")]
    IsolatedVertex(usize),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("unresolved verdicts for rows {0:?}")]
    Unresolved(Vec<usize>),
}

pub type Result<T> = std::result::Result<T, Error>;
