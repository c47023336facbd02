use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a line needs two distinct points")]
    IdenticalPoints,

    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("duplicate point ({x}, {y}) at index {index}")]
    DuplicatePoint { index: usize, x: String, y: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid cutoff {cutoff}: must be at least the series start {start}")]
    InvalidCutoff { start: u64, cutoff: u64 },

    #[error("empty interval: lo {lo} exceeds hi {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("maximum not isolated at cutoff {cutoff}; overlapping candidates {candidates:?}")]
    Unresolved { candidates: Vec<u64>, cutoff: u64 },
}
