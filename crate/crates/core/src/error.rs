use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("infinite factor needs a truncation order: {0}")]
    MissingTruncation(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("no table entry: {0}")]
    Absent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
