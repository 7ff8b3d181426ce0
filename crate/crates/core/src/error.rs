use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("ideal has infinite colength")]
    InfiniteColength,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("inadmissible Hilbert function {0:?}")]
    Inadmissible(Vec<u64>),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
