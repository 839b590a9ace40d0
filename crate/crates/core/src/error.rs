use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// Each variant maps onto one of the CLI exit codes via [`Error::exit_code`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("graph6 error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("embedding file error: {0}")]
    EmbeddingFormat(String),

    #[error("not a partial cube: {reason}")]
    NotPartialCube {
        reason: String,
        witness: Option<(usize, usize)>,
    },

    #[error("{what}: size {actual} exceeds the limit {limit}{hint}")]
    ResourceCap {
        what: &'static str,
        limit: usize,
        actual: usize,
        hint: &'static str,
    },

    #[error("invalid coordinating path system: {0}")]
    InvalidPathSystem(String),

    #[error("embedding failed verification: {0}")]
    Verification(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn not_partial_cube(reason: impl Into<String>) -> Self {
        Error::NotPartialCube {
            reason: reason.into(),
            witness: None,
        }
    }

    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::ResourceCap {
            what,
            limit,
            actual,
            hint: "",
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EdgeList { .. }
            | Error::Graph6 { .. }
            | Error::EmbeddingFormat(_)
            | Error::InvalidArgument(_)
            | Error::InvalidPathSystem(_)
            | Error::Io(_) => 1,
            Error::NotPartialCube { .. } => 2,
            Error::ResourceCap { .. } => 3,
            Error::Verification(_) => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
