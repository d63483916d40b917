use thiserror::Error;

use crate::grading::Grading;

/// Everything that can go wrong inside the calculator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p and q cannot both be zero")]
    EmptySpace,

    #[error("g_{{0,0}} is not defined")]
    ZeroIndex,

    #[error("line index {index} out of range for p+q = {len}")]
    LineIndexOutOfRange { index: usize, len: usize },

    #[error("operation requires finite p and q")]
    InfiniteIndex,

    #[error("grading {0} is not in the basis set D_{{p,q}}")]
    GradingNotInBasis(Grading),

    #[error("illegal divisible class {0}: the negative exponent cannot be legitimized")]
    IllegalDivisibleClass(String),

    #[error("divisible class {0} requested for an infinite index")]
    InfiniteDivisor(String),

    #[error("expression is not homogeneous (gradings {0} and {1})")]
    Inhomogeneous(Grading, Grading),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
