use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("extended Euclid needs at least one nonzero input")]
    BothZero,
    #[error("leading coefficient a_{index} vanishes")]
    ZeroLeadingCoefficient { index: usize },
    #[error("trailing coefficient c_{index} vanishes")]
    ZeroTrailingCoefficient { index: usize },
    #[error("first solution vanishes at index {index}")]
    ZeroFirstSolution { index: usize },
    #[error("sequence does not satisfy the recurrence at index {index}")]
    NotASolution { index: usize },
    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("missing {symbol} index {index}")]
    MissingIndex { symbol: char, index: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("JSON shape error: {0}")]
    Json(String),
}
