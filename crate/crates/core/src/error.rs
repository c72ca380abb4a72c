use thiserror::Error;

/// Errors raised by the path, order and invariant operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Dyck word: {0}")]
    NotADyckWord(String),
    #[error("not a pseudo-Dyck word: {0}")]
    NotAPseudoDyckWord(String),
    #[error("word of length {0} exceeds the supported maximum of 64 steps")]
    PathTooLong(usize),
    #[error("path {0} is not block-indecomposable")]
    NotBlockIndecomposable(String),
    #[error("span at {start} of length {len} is not a movable subpath")]
    NotMovable { start: usize, len: usize },
    #[error("slide choice {i} is outside 1..={max}")]
    ChoiceOutOfRange { i: usize, max: usize },
    #[error("size {n} exceeds the configured cap {cap}")]
    SizeTooLarge { n: usize, cap: usize },
    #[error("element {0} is not in the poset")]
    ElementNotInPoset(String),
    #[error("posets do not share the same element set")]
    ElementSetMismatch,
    #[error("monoid operand must be a non-empty Dyck path")]
    EmptyOperand,
    #[error("[{bottom}, {top}] is not an interval")]
    NotAnInterval { bottom: String, top: String },
    #[error("path {0} has neither shape (v,1,0) nor shape (1,w,1,0,0)")]
    NotInE(String),
    #[error("interval is not a core interval")]
    NotCore,
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("letter after prefix of length {pos} is not 0")]
    LetterNotZero { pos: usize },
    #[error("step {pos} is not an up step")]
    StepNotOne { pos: usize },
    #[error("step {pos} starts at height 0")]
    StartsAtGroundLevel { pos: usize },
    #[error("paths have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("path {0} is not in the Hochschild interval")]
    NotInF(String),
    #[error("word {0} is not the image of a Hochschild path")]
    NotInImage(String),
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("poset with {size} elements exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
