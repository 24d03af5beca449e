use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("need at least {needed} strands, got {got}")]
    TooFewStrands { needed: usize, got: usize },
    #[error("strand index {index} out of range 1..={strands}")]
    StrandIndexOutOfRange { index: usize, strands: usize },
    #[error("invalid permutation images: {reason}")]
    InvalidPermutation { reason: String },
    #[error("permutation is not a transposition: {0}")]
    NotATransposition(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("degree mismatch: morphism has {theta} generators, braid has {braid} strands")]
    DegreeMismatch { theta: usize, braid: usize },
    #[error("position {position} out of range 1..={bound}")]
    PositionOutOfRange { position: usize, bound: usize },
    #[error("block product does not commute with the conjugator")]
    BlockDoesNotCommute,
    #[error("factors at positions {position}, {next} are not a cancelling node pair")]
    NotACancellingPair { position: usize, next: usize },
    #[error("node pair conjugators do not realize inverse factors")]
    NodePairNotInverse,
    #[error("node creation inadmissible: branch images {first} and {second} are not disjoint")]
    NodeCreationInadmissible { first: String, second: String },
    #[error("factorizations are not both liftable for the supplied monodromy")]
    ThetaIncompatible,
    #[error("half-turn count must be at least 1")]
    InvalidHalfTurns,
    #[error("half-turn targets differ: {left} vs {right}")]
    HalfTurnMismatch { left: u32, right: u32 },
    #[error("search limit must be positive")]
    InvalidLimit,
    #[error("{quantity} is not an integer for this input")]
    NonIntegral { quantity: &'static str },
    #[error("cover degree is required for this computation")]
    MissingCoverDegree,
    #[error("fiber genus undefined: {reason}")]
    FiberGenusUndefined { reason: String },
    #[error("family parameter must be at least 2, got {0}")]
    FamilyParameterOutOfRange(i64),
    #[error("invariant dictionary precondition failed: {0}")]
    InvariantPrecondition(&'static str),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
