use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of colors must be at least 1, got {0}")]
    InvalidColorCount(u32),

    #[error("illegal letter {value}_{color} for r = {r}, n = {n}")]
    IllegalLetter { value: u32, color: u32, r: u32, n: usize },

    #[error("not a colored permutation: {0}")]
    NotAPermutation(String),

    #[error("group mismatch: G({r1},{n1}) vs G({r2},{n2})")]
    GroupMismatch { r1: u32, n1: usize, r2: u32, n2: usize },

    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    CapExceeded { what: &'static str, size: u128, limit: u128 },

    #[error("duplicate absolute value {0} in colored poset")]
    DuplicateValue(u32),

    #[error("relations contain a cycle through {0}")]
    Cycle(String),

    #[error("relation mentions {0}, which is not an element of the poset")]
    UnknownElement(String),

    #[error("posets share the absolute value {0}")]
    OverlappingValues(u32),

    #[error("{what} = {value} is out of range (expected {expected})")]
    OutOfRange { what: &'static str, value: u64, expected: String },

    #[error("r = 1 has no anchor letter 0_1, so position n cannot be reversed")]
    MissingAnchor,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("closure has not been established for this partition: {0}")]
    ClosureNotEstablished(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
