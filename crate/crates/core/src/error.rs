use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("matrix sizes differ: A is {a}x{a}, B is {b}x{b}")]
    SizeMismatch { a: usize, b: usize },

    /// `row`/`col` are 1-based vertex indices.
    #[error("A and B do not commute: (AB)({row},{col}) = {lhs} but (BA)({row},{col}) = {rhs}")]
    NonCommuting { row: usize, col: usize, lhs: u64, rhs: u64 },

    #[error("specification is not a bijection: {0}")]
    NotABijection(String),

    #[error("specification breaks the source/range constraint at {pair}")]
    BlockViolation { pair: String },

    #[error("exchange specification unavailable: {0}")]
    ExchangeUnavailable(String),

    #[error("unknown edge {0}")]
    UnknownEdge(String),

    #[error("layer mismatch: expected {expected}, found {found}")]
    LayerMismatch { expected: String, found: String },

    #[error("non-integral coefficient {0} where an integer operator entry is required")]
    NonIntegral(String),

    #[error("Fock basis level {level} has {size} words, above the cap of {cap}")]
    BasisTooLarge { level: usize, size: usize, cap: usize },

    #[error(
        "truncation too shallow for {identity}: level {level} leaves no room for margin {margin} above level {floor}"
    )]
    TruncationTooShallow {
        identity: String,
        level: usize,
        margin: usize,
        floor: usize,
    },

    #[error("pattern space of {size} row configurations exceeds the cap of {cap}")]
    PatternSpaceTooLarge { size: usize, cap: usize },

    #[error("cross-check failure: {0}")]
    CrossCheckFailure(String),

    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CrossCheckFailure(_) => 3,
            _ => 2,
        }
    }
}
