use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph has {n} vertices; at most {max} are supported")]
    UnsupportedSize { n: usize, max: usize },

    #[error("graph is not chordal (hole {hole:?})")]
    NotChordal { hole: Vec<usize> },

    #[error("graph is not connected")]
    Disconnected,

    #[error("{0}")]
    Domain(String),

    #[error("input error on line {line}: {reason}")]
    Input { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
