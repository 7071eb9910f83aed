//! Error types shared across the crate.

use thiserror::Error;

/// A failure reported while parsing the line-oriented semiring text format.
///
/// `line` is 1-based and points at the offending input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

/// Unified error type for all fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed data that is not even a candidate structure: wrong table
    /// dimensions, out-of-range indices, duplicate element names, mismatched
    /// map lengths, and the like.
    #[error("structural error: {0}")]
    Structural(String),

    /// A constructor parameter outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation was invoked on arguments that violate its stated
    /// hypotheses (for example a classification predicate on a non-ideal or
    /// on the whole semiring).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two ideals (or an ideal and a homomorphism end) belong to different
    /// semirings.
    #[error("operands belong to different semirings")]
    ParentMismatch,

    /// Enumeration refused because the requested order exceeds the cap.
    #[error(
        "order {requested} exceeds the enumeration cap {cap}; raise the cap \
         explicitly (KIDEAL_MAX_ORDER for the CLI) if you accept the steep \
         combinatorial cost"
    )]
    OrderCap { requested: usize, cap: usize },

    /// Exhaustive subset scans are limited to small carriers.
    #[error("carrier of size {0} is too large for an exhaustive subset scan (limit 20)")]
    CarrierTooLarge(usize),

    /// Two independent computations of the same quantity disagreed.  This
    /// indicates a bug, never a property of the input.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// Operation tables fail a semiring axiom.
    #[error("semiring axioms violated: {0}")]
    Axioms(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
