use thiserror::Error;

/// Everything that can go wrong outside of internal invariant violations
/// (those abort instead of returning).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value {0} out of range")]
    Value(i64),
    #[error("index {0} given twice")]
    DuplicateIndex(u64),
    #[error("index {index}: {have} < {need}")]
    Below { index: u64, have: i64, need: i64 },
    #[error("index {index}: {have}{delta:+} is not positive")]
    Range { index: u64, have: i64, delta: i64 },
    #[error("arithmetic overflow at index {0}")]
    Overflow(u64),
    #[error("permutation maps index {0} twice")]
    PermDuplicate(u64),
    #[error("permutation image {0} appears twice")]
    PermImageDuplicate(u64),
    #[error("permutation image {0} has no pair of its own")]
    PermNotClosed(u64),
    #[error("{0} expects an idempotent argument")]
    NotIdempotent(&'static str),
    #[error("elements are not congruent, no common idempotent factor exists")]
    NotRelated,
    #[error("truncation support must not be empty")]
    EmptySupport,
    #[error("truncation support has {0} indices, grid points hold at most 8")]
    SupportTooLarge(usize),
    #[error("grid bound {0} outside 2..=255")]
    BadBound(u64),
    #[error("truncation support is missing index {0}")]
    SupportMissing(u64),
    #[error("not an order isomorphism: {0}")]
    NotOrderIso(&'static str),
    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the command-line front end maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}
