use std::fmt;

use thiserror::Error;

/// A syntax or semantic error in ring or polynomial text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
    /// Tokens that would have been accepted here; empty for semantic errors.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to ring {0}")]
    DescriptorMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} is not square-free")]
    NotSquareFree(String),
    #[error("{0} is not cube-free")]
    NotCubeFree(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operation not supported: {0}")]
    Unsupported(String),
    #[error("ord_p requires p to be nonzero and not a unit")]
    ZeroOrUnitModulus,
    #[error("ord_p did not terminate within {0} divisions")]
    IterationCap(u64),
    #[error("-inf + +inf is undefined (mixed valuation kinds)")]
    KindMixing,
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("precondition failed: {}", .0.join("; "))]
    Precondition(Vec<String>),
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("mode error: {0}")]
    Mode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
