//! Error types.

use thiserror::Error;

/// A malformed line in a text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, reason: impl Into<String>) -> ParseError {
        ParseError { line, column, reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("arity mismatch: {0} outputs cannot feed {1} inputs")]
    ArityMismatch(usize, usize),
    #[error("generator {0} does not take a phase")]
    UnexpectedPhase(String),
    #[error("intermediate tensor of 2^{0} entries exceeds the contraction cap of 2^{1}")]
    ResourceLimit(usize, usize),
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("rule {rule} does not match at {anchor:?}")]
    NoMatch { rule: String, anchor: Vec<u32> },
    #[error("rule {0} requires the euler axiom to be enabled")]
    EulerGated(String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("step {index} ({rule}) failed: {reason}")]
    Step { index: usize, rule: String, reason: String },
    #[error("step {index} ({rule}) changed the semantics at n={model} (residual {residual:.3e})")]
    Drift { index: usize, rule: String, model: u32, residual: f64 },
    #[error("H-box present")]
    HBoxPresent,
    #[error("{0}")]
    BadAnchor(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph has {0} vertices, above the cap of {1}")]
    CapExceeded(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
