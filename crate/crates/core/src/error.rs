use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("distance matrix is empty")]
    EmptyMatrix,
    #[error("distance matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("non-finite distance at ({0},{1})")]
    NonFiniteEntry(usize, usize),
    #[error("negative distance at ({0},{1})")]
    NegativeEntry(usize, usize),
    #[error("non-zero diagonal at ({0},{0})")]
    NonZeroDiagonal(usize),
    #[error("asymmetric at ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("unbounded alpha: d({u},{v}) > 0 but d({u},{w}) + d({w},{v}) = 0")]
    UnboundedAlpha { u: usize, v: usize, w: usize },

    #[error("element {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate element {0} in set")]
    DuplicateElement(usize),
    #[error("sets overlap at element {0}")]
    OverlappingSets(usize),
    #[error("element {0} already in set")]
    ElementAlreadyInSet(usize),

    #[error("invalid objective: {0}")]
    InvalidObjective(String),
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("set is not independent")]
    NotIndependent,
    #[error("no perfect exchange matching exists")]
    NoPerfectMatching,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("ground set of size {n} exceeds enumeration limit {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },
    #[error("search space of {states} states exceeds limit {limit}")]
    SearchSpaceTooLarge { states: u128, limit: u64 },

    #[error("algorithm requires a {expected} constraint")]
    WrongConstraintKind { expected: &'static str },
    #[error("p = {p} exceeds ground set size {n}")]
    PTooLarge { p: usize, n: usize },
    #[error("matroid rank {0} is too small (need at least 2)")]
    RankTooSmall(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
