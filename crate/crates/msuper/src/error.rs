use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid label: {0}")]
    Label(String),
    #[error("eigenspace has dimension {0}, expected 1")]
    Eigenspace(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
