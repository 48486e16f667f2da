use thiserror::Error;

use crate::poly::VarId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Multivariate division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// A quantity that must be even (a ½-normalized determinant) was not.
    #[error("odd coefficient where an even polynomial was required")]
    OddCoefficient,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    /// A half-integer power of x_i survived the s-variable rewrite.
    #[error("odd power of a half-power variable survived")]
    OddHalfPower,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),
    #[error("series caps differ ({left} vs {right})")]
    CapMismatch { left: usize, right: usize },
    #[error("coefficient index {index} outside truncation cap {cap}")]
    IndexOutOfRange { index: i64, cap: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("lattice paths intersect")]
    IntersectingTuple,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}
