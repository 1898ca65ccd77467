use thiserror::Error;

use crate::exactalg::Field;

/// Errors raised by the algebraic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("enumeration requires a finite field, got {0}")]
    InfiniteField(Field),
    #[error("ambient dimension {dim} exceeds the enumeration bound {bound}")]
    OverBound { dim: usize, bound: usize },
    #[error("bilinear map is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("functional must be defined on the socle")]
    FunctionalDomain,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("the Hilbert sequence requires characteristic zero, got {0}")]
    HilbertNeedsRationals(Field),
    #[error("{0}")]
    Precondition(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
