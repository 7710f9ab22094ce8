//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library's fallible operations.
///
/// Arithmetic on [`crate::scalar::QScalar`] itself panics on division by
/// zero (a programming error); the contract-level failure modes below are
/// what callers are expected to handle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible evaluation point: {0}")]
    InadmissiblePoint(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("matrix shape mismatch: {left} vs {right} in {op}")]
    ShapeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("basic hypergeometric series does not terminate within {max_terms} terms")]
    NonTerminatingSeries { max_terms: usize },

    #[error("lower-parameter q-Pochhammer vanishes at term {term}")]
    VanishingLowerParameter { term: usize },

    #[error("q-Racah truncation condition violated: {0} of the three branch conditions hold")]
    TruncationCondition(usize),

    #[error("eigenvalue list invalid: {0}")]
    BadEigenvalues(String),

    #[error(
        "minimal polynomial hypothesis fails: product of (A - lambda I) has max |entry| {max_abs}"
    )]
    MinimalPolynomial {
        max_abs: f64,
        residual: Box<crate::matrix::QMatrix>,
    },

    #[error("spin label must be a nonnegative integer or half-integer, got {0}")]
    InvalidSpin(String),

    #[error("{0} is not in the admissible spin set for this tensor cube")]
    SpinNotInRange(String),

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: String,
    },

    #[error("coassociativity violated for generator {generator} (max |entry| {max_abs})")]
    Coassociativity { generator: &'static str, max_abs: f64 },

    #[error("restricted operator is not tridiagonal at entry ({row}, {col})")]
    NotTridiagonal { row: usize, col: usize },

    #[error("highest-weight postcondition failed: {0}")]
    HighestWeight(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
