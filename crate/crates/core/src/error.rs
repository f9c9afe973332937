use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::PolyZ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact (remainder {remainder})")]
    NonExactDivision { remainder: PolyZ },

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },

    #[error("matrix is not square: {rows} rows, row {bad_row} has {cols} entries")]
    NotSquare { rows: usize, bad_row: usize, cols: usize },

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{0} is out of range")]
    Range(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("order is not a linear extension: {0}")]
    NotLinearExtension(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("order relation has a cycle through `{0}`")]
    Cycle(String),

    #[error("subset is not downward closed: `{0}` lies below a member but is missing")]
    NotClosed(String),

    #[error("complexes live over different ladder specs")]
    SpecMismatch,

    #[error("syzygy of S_{top}^({length}) repeats; resolution does not terminate")]
    NonTerminating { top: usize, length: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
