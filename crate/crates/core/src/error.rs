use thiserror::Error;

use crate::graph::ClassTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse error category, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    Usage,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected a {expected} graph, found {found}")]
    WrongClass { expected: ClassTag, found: ClassTag },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("comparison undefined for a graph without edges")]
    UndefinedComparison,
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Graph6(_) => ErrorKind::Parse,
            Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. }
            | Error::Disconnected
            | Error::WrongClass { .. }
            | Error::UndefinedComparison => ErrorKind::Validation,
            Error::InvalidArgument(_) | Error::Precondition(_) => ErrorKind::Usage,
            Error::Overflow(_) => ErrorKind::Internal,
        }
    }
}
