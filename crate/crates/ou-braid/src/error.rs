use thiserror::Error;

/// Errors produced by word parsing, validation, and the layer operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least 1")]
    InvalidStrandCount,
    #[error("generator index must be nonzero")]
    ZeroLetter,
    #[error("generator {letter} out of range for {n} strands")]
    LetterOutOfRange { letter: i32, n: usize },
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("strand counts differ: {0} vs {1}")]
    StrandCountMismatch(usize, usize),
    #[error("permutation on {0} elements does not fit {1} strands")]
    SizeMismatch(usize, usize),
    #[error("image is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("strand label {strand} out of range 1..={n}")]
    StrandOutOfRange { strand: usize, n: usize },
    #[error("strand labels must be distinct")]
    EqualStrands,
    #[error("word contains negative letters")]
    NotPositive,
    #[error("no {kind} pattern at position {position}")]
    MoveNotApplicable { kind: &'static str, position: usize },
    #[error("matrix index out of range")]
    IndexOutOfRange,
    #[error("matrix rows must form a square matrix")]
    NotSquare,
    #[error("empty strand set")]
    EmptyStrandSet,
    #[error("invalid interleave assignment: {0}")]
    BadInterleave(String),
    #[error("strand sets are not a valid layering")]
    NotALayering,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
