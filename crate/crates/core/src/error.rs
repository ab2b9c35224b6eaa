use crate::words::PatternKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("letter {0:?} appears more than once in the alphabet")]
    DuplicateLetter(char),
    #[error("letter {0:?} is not a printable symbol")]
    UnprintableLetter(char),
    #[error("alphabets hold at most 256 letters, got {0}")]
    AlphabetTooLarge(usize),
    #[error("character {letter:?} at position {position} is not in the alphabet")]
    UnknownLetter { letter: char, position: usize },
    #[error("letter index {0} is out of range for the alphabet")]
    IndexOutOfRange(usize),
    #[error("the factor to count must be nonempty")]
    EmptyFactor,
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("image of {letter:?} is empty; morphisms must be non-erasing")]
    ErasingImage { letter: char },
    #[error("expected {expected} images (one per source letter), got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("morphism is not uniform: image lengths differ")]
    NotUniform,
    #[error("morphism source and target alphabets differ; cannot iterate")]
    NotEndomorphism,
    #[error(
        "image of {seed:?} begins with {first:?}, so the morphism is not prolongable on {seed:?}"
    )]
    NotProlongable { seed: char, first: char },
    #[error("the fixed point from {seed:?} is finite ({len} letters), shorter than the requested {requested}")]
    FiniteFixedPoint {
        seed: char,
        len: usize,
        requested: usize,
    },
    #[error("target length must be at least 1")]
    ZeroLength,
    #[error("unknown catalog morphism {0:?} (expected thue_morse, leech, f4 or g4)")]
    UnknownCatalog(String),
    #[error("the alphabet must have more than one letter")]
    UnaryAlphabet,
    #[error("{0} is not supported here")]
    UnsupportedPattern(PatternKind),
    #[error("max length {got} is below the minimum {min} for this search")]
    MaxLenTooSmall { min: usize, got: usize },
    #[error("period must be at least 1 and the tile length n at least 1")]
    BadModulus,
    #[error("occurrence is a {0}, expected an overlap")]
    NotAnOverlap(PatternKind),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
