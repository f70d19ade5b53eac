use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("graph6 format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },

    #[error("resource cap exceeded: {what} is {actual}, cap is {cap}")]
    Resource {
        what: &'static str,
        cap: u64,
        actual: u64,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    /// The requested invariant does not exist for this graph (e.g. the
    /// distinguishing index of K2).
    #[error("undefined: {0}")]
    Undefined(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
