use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("letter {letter} outside the alphabet 1..={generators}")]
    LetterOutOfRange { letter: u32, generators: usize },

    #[error("words are limited to {max} letters, requested {requested}")]
    WordTooLong { requested: usize, max: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("{generators}^{degree} = {words} words exceeds the memory guard of {limit}")]
    MemoryGuard {
        generators: usize,
        degree: usize,
        words: u128,
        limit: u64,
    },

    #[error("degree {requested} was not computed (maximum degree {max})")]
    DegreeNotComputed { requested: usize, max: usize },

    #[error("dual components were not computed for this algebra")]
    DualNotComputed,

    #[error("coefficient {requested} lies beyond the truncation order {order}")]
    BeyondTruncation { requested: usize, order: usize },

    #[error("series division needs constant term 1 or -1, found {0}")]
    NonUnitConstant(i64),

    #[error("closed form coefficient is not an integer: {0}")]
    NonIntegral(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("probe not applicable: {0}")]
    Inapplicable(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
