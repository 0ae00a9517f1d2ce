//! Error type shared by the fallible library entry points.

use thiserror::Error;

/// Failure modes of the exact-arithmetic, series, linear-algebra and operator
/// layers.
///
/// Plain scalar arithmetic panics on division by an exact zero, like built-in
/// integer division; the checked entry points return this type instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Two matrices with incompatible shapes were combined.
    #[error("shape mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    /// An operation that needs a square matrix got a rectangular one.
    #[error("matrix is {rows}x{cols} but must be square")]
    NotSquare { rows: usize, cols: usize },
    /// Elimination found no nonzero pivot in the given column.
    #[error("matrix is singular: no nonzero pivot in column {column}")]
    Singular { column: usize },
    /// A trace-based inverse was asked for a matrix with zero determinant.
    #[error("matrix is singular: determinant is zero")]
    ZeroDeterminant,
    /// Rows of unequal length when building a matrix.
    #[error("matrix rows must all have the same length")]
    RaggedRows,
    /// Series division needs an invertible constant term in the divisor.
    #[error("series division requires an invertible constant term")]
    NonUnitDivisor,
    /// A series coefficient past the truncation order was requested.
    #[error("coefficient index {index} exceeds series order {order}")]
    OrderExceeded { index: usize, order: usize },
    /// The square operator matrix exists only when the two integration bounds
    /// have the same slope (c = a).
    #[error("square operator matrix requires bounds with equal slopes (c = a)")]
    UnequalSlopes,
    /// A scalar parameter was outside an operation's stated range.
    #[error("parameter out of range: {message}")]
    OutOfRange { message: &'static str },
    /// A string did not parse as the expected exact value.
    #[error("cannot parse {input:?} as {expected}")]
    Parse {
        expected: &'static str,
        input: String,
    },
    /// Malformed JSON, or JSON that does not match the declared schema.
    #[error("invalid JSON: {0}")]
    Json(String),
}
