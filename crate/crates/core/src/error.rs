use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by non-homogeneous scalar {0}")]
    NonHomogeneousDivisor(String),
    #[error("rational function {0} is not a constant")]
    NotConstant(String),
    #[error("denominator vanishes at k = {0}")]
    PoleAt(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("box ({column},{row}) is outside the diagram {partition}")]
    BoxOutside {
        partition: String,
        column: usize,
        row: usize,
    },
    #[error("{lam} does not cover {mu} by a single box")]
    NotACover { mu: String, lam: String },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("partition {partition} has more than N = {n} parts")]
    LengthExceeds { partition: String, n: usize },
    #[error("expected basis {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("character has a zero weight; the Euler class vanishes")]
    ZeroWeight,
    #[error("Heisenberg mode index must be nonzero")]
    ZeroMode,
    #[error("an operator word needs at least one mode")]
    EmptyWord,
    #[error("vanishing denominator during {0}")]
    Degenerate(String),
    #[error("operator truncated at degree {valid_through} applied to degree {degree}")]
    OutsideTruncation { degree: usize, valid_through: usize },
}
