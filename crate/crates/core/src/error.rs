use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is out of range for degree {n}")]
    OutOfRange { point: String, n: usize },
    #[error("point {0} appears in more than one block")]
    DuplicatePoint(String),
    #[error("block {0:?} has more than two points")]
    OversizedBlock(Vec<String>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("rank {r} has the wrong parity for {family} of degree {n}")]
    ParityInvalid { family: String, n: usize, r: usize },
    #[error("rank {r} exceeds degree {n}")]
    RankOutOfRange { n: usize, r: usize },
    #[error("{what} would have {size} elements, above the guard of {limit}")]
    TooLarge { what: String, size: String, limit: usize },
    #[error("closure exceeded the bound of {bound} elements (partial size {partial})")]
    BoundExceeded { bound: usize, partial: usize },
    #[error("no closed formula is known here: {0}")]
    OutOfTheoremRange(String),
    #[error("{0} is not a non-transversal block on that side")]
    NotANontransversalBlock(String),
    #[error("{0} is not a projection")]
    NotAProjection(String),
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),
    #[error("{0:?} is not an integer partition")]
    NotAPartition(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
