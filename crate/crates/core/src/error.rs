use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: offending token `{token}`")]
    Parse { what: &'static str, token: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("shape mismatch: gl({0}|{1}) vs gl({2}|{3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("weight {0} is typical")]
    Typical(String),

    #[error("invalid left path: {0}")]
    InvalidPath(#[from] crate::moves::PathViolation),

    #[error("right path moves collide at vertex {0}")]
    RightCollision(i64),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vertex range is empty: {0} >= {1}")]
    EmptyRange(i64, i64),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
