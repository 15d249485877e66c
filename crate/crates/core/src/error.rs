use thiserror::Error;

use crate::partition::BoxCoord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be non-increasing: {prev} is followed by {next}")]
    NotNonIncreasing { prev: usize, next: usize },

    #[error("zero part mixed with positive parts")]
    ZeroPart,

    #[error("not a non-negative integer: {0:?}")]
    InvalidInteger(String),

    #[error("box {0} is not in the partition")]
    BoxNotInPartition(BoxCoord),

    #[error("concatenation is not a partition: {right_first} > {left_last}")]
    NotAPartition { left_last: usize, right_first: usize },

    #[error("partition is not {b}-regular")]
    NotBRegular { b: usize },

    #[error("operation requires a non-empty partition")]
    EmptyInput,

    #[error("parameters must satisfy 1 <= a < b (got a={a}, b={b})")]
    InvalidParameters { a: usize, b: usize },

    #[error("modulus must be at least 2 (got b={0})")]
    InvalidModulus(usize),

    #[error("partition is not Cr_{{{a},{b}}}-valid")]
    NotCrValid { a: usize, b: usize },

    /// Sliding the first row as `Sr_{a,b}` prescribes produced a box set
    /// that is not a Young diagram.
    #[error("Sr_{{{a},{b}}} lands a box at {landing}, which is not at the end of its row")]
    SrNotAPartition { a: usize, b: usize, landing: BoxCoord },

    #[error("malformed Maya diagram: {0}")]
    MalformedDiagram(String),

    #[error("box {0} is not addable")]
    NotAddable(BoxCoord),

    #[error("box {0} is not removable")]
    NotRemovable(BoxCoord),

    #[error("pair (a,b)=({a},{b}) is not accepted here: {reason}")]
    UnsupportedPair { a: usize, b: usize, reason: String },

    #[error("{scan}: {count} violation(s) of a proved statement, first {first}")]
    ScanViolation { scan: String, count: usize, first: String },

    /// An internal consistency check failed. Unreachable for valid input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
