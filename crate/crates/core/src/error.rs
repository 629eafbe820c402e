use thiserror::Error;

use crate::kernel::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{name} must be non-negative, got {value}")]
    NegativeArgument { name: &'static str, value: i64 },

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("zero vector has no normalized equation")]
    ZeroVector,

    #[error("invalid equation: {0}")]
    InvalidEquation(String),

    #[error("degenerate input: all terms zero")]
    DegenerateInput,

    #[error("insufficient terms: d = {d} needs {needed} rows but only {available} can be formed")]
    InsufficientTerms {
        d: usize,
        needed: usize,
        available: usize,
    },

    #[error("leading coefficient vanishes at row n = {n}")]
    LeadingCoefficientZero { n: usize },

    #[error("inconsistent initial terms: row n = {n} leaves residual {residual}")]
    InconsistentInitialTerms { n: usize, residual: Rational },

    #[error("row n = {n} is quadratic in its new unknown")]
    NonlinearStep { n: usize },

    #[error("at least {needed} initial terms are required, got {got}")]
    InsufficientInitialTerms { needed: usize, got: usize },

    #[error("{}", match .line {
        Some(l) => format!("line {l}: {message}"),
        None => message.clone(),
    })]
    Input { line: Option<usize>, message: String },
}
