use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type `{0}`")]
    InvalidType(String),
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("expected a dominant {what}, got {value}")]
    NotDominant { what: &'static str, value: String },
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(String, String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("node {node} of {ty} is not minuscule: weight {weight} lies in the orbit of omega_{node}")]
    NotMinuscule { ty: String, node: usize, weight: String },
    #[error("{0} is not supported here")]
    Unsupported(String),
    #[error("multiplicity table inconsistent at weight {weight}: {msg}")]
    TableInconsistent { weight: String, msg: String },
    #[error("missing entry for node {0}")]
    MissingNode(usize),
    #[error("search window exhausted: {0}")]
    WindowExhausted(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
