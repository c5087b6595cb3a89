use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("normal orderings differ; convert one operand first")]
    OrderingMismatch,
    #[error("element has zero constant term and is not a unit")]
    ZeroConstantTerm,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is not monic in a")]
    NotMonic,
    #[error("element is zero")]
    ZeroElement,
    #[error("no witness r <= {0}")]
    NotFound(u32),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("a-degree {got} exceeds the allowed {max}")]
    DegreeTooHigh { got: u32, max: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for AlgebraError {
    fn from(e: serde_json::Error) -> Self {
        AlgebraError::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
