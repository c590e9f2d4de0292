use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: z + {shift} = 0")]
    Pole { shift: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unknown key `{key}`; valid keys: {}", valid.join(", "))]
    UnknownKey { key: String, valid: Vec<String> },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty sequence")]
    EmptySequence,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
