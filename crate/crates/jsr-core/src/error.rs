use thiserror::Error;

/// Errors surfaced by the library. Parse errors carry a JSON-pointer-like
/// path so the CLI can point at the offending entry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows but row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("matrix set is empty")]
    EmptySet,
    #[error("matrix set has mixed dimensions: member 0 is {expected}x{expected}, member {member} is {got}x{got}")]
    DimensionMismatch { expected: usize, member: usize, got: usize },
    #[error("duplicate member: matrices {first} and {second} are identical")]
    DuplicateMember { first: usize, second: usize },
    #[error("empty product word")]
    EmptyWord,
    #[error("word index {index} out of range for a set of {members} matrices")]
    IndexOutOfRange { index: usize, members: usize },
    #[error("member index {index} out of range 1..={members}")]
    MemberOutOfRange { index: usize, members: usize },
    #[error("depth must be at least 1")]
    DepthZero,
    #[error("matrix has a negative entry at ({row},{col}); this operation requires nonnegative entries")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix has a non-integer entry at ({row},{col}); this operation requires integer entries")]
    NonIntegerEntry { row: usize, col: usize },
    #[error("threshold must be 1 or 2, got {0}")]
    InvalidThreshold(u32),
    #[error("expected a set of exactly {expected} matrices, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("expected {expected}x{expected} matrices, got {got}x{got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("word length {len} is not a multiple of m = {m}")]
    NotMultipleOfM { len: usize, m: usize },
    #[error("product budget exhausted after {evaluated} products (budget {budget}); raise --budget to continue")]
    ResourceBudget { evaluated: u64, budget: u64 },
    #[error("{0}")]
    Unsupported(String),
    #[error("verification identity violated: {0}")]
    IdentityViolation(String),
    #[error("block structure violated: {0}")]
    StructureViolation(String),
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}
