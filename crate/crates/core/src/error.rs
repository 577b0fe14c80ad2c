use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("cells do not form a domino: {0}")]
    InvalidDomino(String),
    #[error("invalid domino tableau: {0}")]
    InvalidTableau(String),
    #[error("value {0} already present in tableau")]
    ValueCollision(u32),
    #[error("invalid colored word: {0}")]
    InvalidWord(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("operation requires a multiplicity-free biword; biletter {0} repeats")]
    NotMultiplicityFree(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("local rule violated at square ({i}, {j}): {message}")]
    LocalRule { i: usize, j: usize, message: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("2-core {0} is not supported here: {1}")]
    UnsupportedCore(String, String),
    #[error("series configuration mismatch: {0}")]
    SeriesConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
