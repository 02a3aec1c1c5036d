use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at q=1")]
    PoleAtOne,
    #[error("not divisible")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operator is not graded: {0}")]
    NotGraded(String),
    #[error("odd operator cannot be leg-embedded")]
    OddEmbedding,
    #[error("coefficient not in localization: {0}")]
    NotInLocalization(String),
    #[error("straightening did not terminate within bound ({0} steps)")]
    StraightenDiverged(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
