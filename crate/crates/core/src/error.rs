use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    /// A construction was handed a graph outside its precondition.
    #[error("{recipe}: {reason}")]
    Precondition { recipe: &'static str, reason: String },

    #[error("strategy `{strategy}` chose illegal vertex {vertex} at time {time}: {reason}")]
    StrategyFault {
        strategy: String,
        vertex: usize,
        time: usize,
        reason: String,
    },

    #[error("instance too large: {what} = {value} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn pre(recipe: &'static str, reason: impl Into<String>) -> Self {
        Error::Precondition {
            recipe,
            reason: reason.into(),
        }
    }

    pub(crate) fn unknown(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Unknown {
            kind,
            name: name.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
