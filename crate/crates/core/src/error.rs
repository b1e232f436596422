use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("permutation is not fully commutative")]
    NotFullyCommutative,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("not an inner corner: ({0},{1})")]
    NotInnerCorner(usize, usize),
    #[error("arithmetic: {0}")]
    Arithmetic(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
