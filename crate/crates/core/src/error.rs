use alloc::string::String;

use thiserror::Error;

/// Errors raised by the combinatorial constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is out of range (supported: 1..={max})", max = crate::MAX_RANK)]
    RankOutOfRange(usize),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i32, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("step {step} of the chain does not cross a wall of the current alcove")]
    NotAWall { step: usize },
    #[error("alcove walk ends at the wrong alcove")]
    EndpointMismatch,
    #[error("chain too long for subset enumeration ({0} entries, max 64)")]
    ChainTooLong(usize),
    #[error("coefficient has a denominator where a polynomial was required")]
    NotPolynomial,
}

pub type Result<T> = core::result::Result<T, Error>;
