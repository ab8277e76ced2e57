use thiserror::Error;

/// Errors raised by generators, transforms and the scene composer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rotation plan: {0}")]
    InvalidPlan(String),

    #[error("invalid rotation matrix: {0}")]
    InvalidRotation(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: String, reason: String },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("parameter `{param}` is not accepted by {target}")]
    RejectedParameter { param: String, target: String },

    #[error("unknown shape kind `{0}`")]
    UnknownShape(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("degenerate hole: {0}")]
    DegenerateHole(String),

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err(name: &str, reason: impl Into<String>) -> Error {
    Error::Parameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}
