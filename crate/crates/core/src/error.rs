use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("length {0} exceeds the 128-coordinate limit")]
    TooLong(usize),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid hex digit {0:?}")]
    InvalidHex(char),

    #[error("upper-triangular hex string has {actual} digits, expected {expected}")]
    HexLength { actual: usize, expected: usize },

    #[error("graph validation failed: {0}")]
    InvalidGraph(String),

    #[error("no proper 3-face coloring exists")]
    NoFaceColoring,

    #[error("faces {0} and {1} share a color")]
    SameColorFaces(usize, usize),

    #[error("unknown face index {0}")]
    UnknownFace(usize),

    #[error("unknown built-in {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("self-duality postcondition failed: {0}")]
    PostconditionFailed(String),

    #[error("projection of the upper triangle disagrees with the base matrix at ({row}, {col})")]
    ProjectionMismatch { row: usize, col: usize },

    #[error("no lift completion: orthogonality system inconsistent at row {row}")]
    InconsistentRow { row: usize },

    #[error("lift completion has {0} solutions, above the enumeration cap")]
    TooManyCompletions(u64),

    #[error("retry budget of {0} exhausted")]
    BudgetExhausted(usize),

    #[error("repair needs a 35- or 37-digit string, got {0} digits")]
    RepairPrecondition(usize),

    #[error("dimension {k} exceeds enumeration limit {limit}")]
    DimensionLimit { k: usize, limit: usize },

    #[error("weight {0} present: not the distribution of a self-dual code")]
    OddWeight(usize),

    #[error("weight enumerator matches no known family: {0}")]
    NoFamily(String),

    #[error("collected more than {0} words of the requested weight")]
    WordCap(usize),

    #[error("vector X has even weight {0}; extension needs <X,X> = 1")]
    EvenWeightX(u32),

    #[error("invalid vector notation: {0}")]
    XNotation(String),

    #[error("code store: {0}")]
    Store(String),
}
