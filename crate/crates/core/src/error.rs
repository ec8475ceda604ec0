use thiserror::Error;

use crate::semigroup::Element;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a semigroup needs at least one element")]
    EmptySemigroup,
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("product is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Element, Element, Element),
    #[error("{found} names given for {size} elements")]
    NameCount { size: usize, found: usize },
    #[error("closure exceeded the capacity of {0} elements")]
    CapacityExceeded(usize),
    #[error("semigroup is not simple")]
    NotSimple,

    #[error("invalid letter token {0:?}")]
    InvalidLetter(String),
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(usize),
    #[error("the empty word has no image under a morphism")]
    EmptyWord,
    #[error("the period of an ultimately periodic word must be nonempty")]
    EmptyPeriod,
    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("element {0} is not in the semigroup")]
    ElementOutOfRange(Element),
    #[error("({0}, {1}) is not a linked pair")]
    NotLinkedPair(Element, Element),
    #[error("accepting set must cover every linked pair of the image exactly once; {0}")]
    IncompleteAcceptance(String),

    #[error("state {0} is out of range")]
    StateOutOfRange(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("no witness found for the pair ({0}, {1})")]
    Uncertified(String, String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
