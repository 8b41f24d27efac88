use thiserror::Error;

/// Errors raised by the library.
///
/// Variants ending in `Violation` signal that an identity which is a theorem
/// failed to hold; they should never fire and indicate a bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse step set: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value is not invertible modulo the given polynomial (common factor {factor})")]
    NotInvertible { factor: String },

    #[error("leading coefficient of the series is not invertible")]
    NonInvertibleSeries,

    #[error("series square root needs constant term 1")]
    SqrtConstantTerm,

    #[error("fixed-point iteration does not contract at order {0}")]
    Divergence(i32),

    #[error("rational-function coefficient has a non-monomial denominator")]
    NotLaurent,

    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("step set outside scope: {0}")]
    OutOfScope(String),

    #[error("the group of this step set is not known to be finite")]
    InfiniteGroup,

    #[error("method not applicable: {0}")]
    NotApplicable(String),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
