use thiserror::Error;

/// Errors produced by graph construction, I/O and the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex index {index} out of range for n = {n}")]
    OutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generators reach only {reached} of {expected} group elements")]
    NotGenerating { reached: usize, expected: usize },
    #[error("no vertices selected for curvature")]
    NoVertices,
    #[error("eigensolver residual {residual:e} exceeds bound {bound:e}")]
    EigenResidual { residual: f64, bound: f64 },
    #[error("quadratic form consistency: {0}")]
    FormConsistency(String),
    #[error("graph has {n} vertices; exact enumeration is capped at {cap} (use the sweep method)")]
    OverCap { n: usize, cap: usize },
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("iterative solver did not converge: {0}")]
    NoConvergence(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
