use thiserror::Error;

use crate::diagram::Chord;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("position {pos} is out of range for a word of length {len}")]
    OutOfRange { pos: usize, len: usize },

    #[error("letters at positions {pos} and {} do not commute", pos + 1)]
    PositionNotCommutable { pos: usize },

    #[error("no braid pattern i j i with |i-j| = 1 starts at position {pos}")]
    NoBraidAtPosition { pos: usize },

    #[error("commutation class exceeds the limit of {limit} words")]
    ClassTooLarge { limit: usize },

    #[error("search exceeded its budget of {budget} states")]
    SearchBudgetExceeded { budget: usize },

    #[error("word is not reduced")]
    NotReduced,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("diagram rank must be at least 1")]
    EmptyBox,

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("chords {a} and {b} cross")]
    CrossingChords { a: Chord, b: Chord },

    #[error("left and right crossing orders disagree at {0}")]
    InconsistentCrossingOrder(String),

    #[error("region graph contains a cycle")]
    CyclicRegionGraph,

    #[error("enumeration at k = {k} exceeds the cap of {cap}")]
    BudgetExceeded { k: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Coarse classification used by the command line front end.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::LetterOutOfRange { .. } => ErrorKind::Parse,
            Error::ClassTooLarge { .. }
            | Error::SearchBudgetExceeded { .. }
            | Error::BudgetExceeded { .. } => ErrorKind::Budget,
            _ => ErrorKind::Invariant,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Invariant,
    Budget,
}

pub type Result<T> = std::result::Result<T, Error>;
