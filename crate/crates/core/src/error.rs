use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("non-simple root: derivative vanishes at the initial value")]
    NonSimpleRoot,
    #[error("no series root with the requested initial value")]
    NoRoot,
    #[error("inexact division")]
    InexactDivision,
    #[error("model is uninteresting: {0}")]
    Uninteresting(String),
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("substituted denominator vanishes identically")]
    DegenerateComposition,
    #[error("group is not finite")]
    InfiniteGroup,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not enough terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
