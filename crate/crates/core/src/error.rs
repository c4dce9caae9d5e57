use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("rotation system is not a planar embedding: {faces} faces, expected {expected}")]
    NotPlanarEmbedding { faces: usize, expected: usize },
    #[error("multi-edge between {0} and {1}")]
    MultiEdge(usize, usize),
    #[error("n = {n} is too small (need at least {min})")]
    NTooSmall { n: usize, min: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("graph is not a planar 3-tree")]
    Not3Tree,
    #[error("graph is not maximal outerplanar")]
    NotMaximalOuterplanar,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invariant {invariant} violated at step {step}: {detail}")]
    InvariantViolation {
        step: usize,
        invariant: String,
        detail: String,
    },
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("geometry breakdown at step {step}: {detail}")]
    GeometryBreakdown { step: usize, detail: String },
    #[error("edges ({0},{1}) and ({0},{2}) leave vertex {0} along the same ray")]
    OverlappingEdges(usize, usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("input class {found} does not match algorithm {algo}")]
    ClassMismatch { algo: String, found: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
