use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed duration `{token}` (expected H:MM with minutes below 60)")]
    Duration { token: String },

    #[error("invalid job data: {0}")]
    Jobs(String),

    #[error("savings matrix is not symmetric at row {row}, column {col}")]
    AsymmetricSavings { row: usize, col: usize },

    #[error("savings matrix has nonzero diagonal entry at row {index}")]
    NonzeroDiagonal { index: usize },

    #[error(
        "savings matrix must be {expected}x{expected}, found a row of length {found} at row {row}"
    )]
    SavingsShape {
        expected: usize,
        row: usize,
        found: usize,
    },

    #[error("invalid savings value at row {row}, column {col}: {reason}")]
    SavingsValue {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("not a permutation of 1..={n}: {detail}")]
    Permutation { n: usize, detail: String },

    #[error("invalid pairing for {n} positions: {detail}")]
    Pairing { n: usize, detail: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("refusing to enumerate {n}! permutations: instance size exceeds the enumeration bound of {limit}")]
    EnumerationBound { n: usize, limit: usize },

    #[error("cannot parse solution notation `{text}`: {reason}")]
    Notation { text: String, reason: String },

    #[error("problem file: {0}")]
    ProblemFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
