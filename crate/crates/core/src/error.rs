use thiserror::Error;

/// Errors produced by partition construction, staircase analysis and series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid part {token:?}: expected a positive integer")]
    InvalidToken { token: String },

    #[error("parts must be positive, found {0}")]
    NonPositivePart(usize),

    #[error("parts must be strictly decreasing: {prev} is followed by {next}")]
    NotStrictlyDecreasing { prev: usize, next: usize },

    #[error("box partition {parts:?} is not weakly decreasing within width {width}")]
    InvalidBox { parts: Vec<usize>, width: usize },

    #[error("partition is not of the form base + box: {0}")]
    NotInStaircaseForm(String),

    #[error("part {part} does not exceed m = {m}")]
    PartTooSmall { part: usize, m: usize },

    #[error("operation requires a non-empty partition")]
    EmptyPartition,

    #[error("{op} is not defined here: {reason}")]
    PreconditionViolated { op: &'static str, reason: String },

    #[error("truncation mismatch: {left:?} vs {right:?}")]
    TruncationMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("series has constant term {0}, which is not a unit")]
    NonUnitConstantTerm(String),

    #[error("gaussian binomial [{a} choose {b}] requires b <= a")]
    BinomialRange { a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
