//! Error types shared by the distribution modules.

use core::fmt;

/// Parameter validation failure for [`crate::TspParams`] / [`crate::DtspParams`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamError {
    /// An endpoint or threshold supplied as a real number has a fractional part.
    NonIntegerEndpoint,
    /// `b <= a`: the support `{a, ..., b-1}` would be empty.
    EmptySupport,
    /// `m < a` or `m > b`.
    ThresholdOutOfRange,
    /// `n <= 0` (or NaN).
    NonPositiveShape,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::NonIntegerEndpoint => {
                write!(f, "NonIntegerEndpoint: a, m and b must be integers")
            }
            ParamError::EmptySupport => {
                write!(f, "EmptySupport: b must be strictly greater than a")
            }
            ParamError::ThresholdOutOfRange => {
                write!(f, "ThresholdOutOfRange: m must satisfy a <= m <= b")
            }
            ParamError::NonPositiveShape => {
                write!(f, "NonPositiveShape: n must be a positive real number")
            }
        }
    }
}

impl std::error::Error for ParamError {}

/// Domain failure when evaluating a distribution function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    /// The argument lies outside the support (or outside `[a, b]` for the
    /// continuous parent).
    OutOfSupport,
    /// `pmf_ratio` was asked for the pair `(m-1, m)`, which straddles the
    /// two branches of the pmf.
    BranchCrossing,
    /// A probability argument was outside its admissible range.
    InvalidProbability,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::OutOfSupport => write!(f, "OutOfSupport: argument outside the support"),
            EvalError::BranchCrossing => {
                write!(f, "BranchCrossing: y = m-1 pairs across the two pmf branches")
            }
            EvalError::InvalidProbability => {
                write!(f, "InvalidProbability: probability argument outside its range")
            }
        }
    }
}

impl std::error::Error for EvalError {}
