use thiserror::Error;

use crate::satake::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0} for this operation")]
    InvalidRank(usize),

    #[error("invalid Satake diagram: {family} does not admit n = {n}")]
    InvalidDiagram { family: Family, n: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("node {node} has a_(i,tau(i)) = 0 and carries no s-parameter")]
    NoSParameter { node: usize },

    #[error("dual elements are not supported for a diagram with an a_(i,tau(i)) = -1 node")]
    UnsupportedDual,

    #[error("the A.3 case division only applies to odd s (got s = {0})")]
    NotApplicable(u32),

    #[error("the K-matrix acts on plain elements; use the inverse for dual input")]
    UnsupportedDirection,

    #[error("dual flag mismatch: expected dual = {expected}")]
    FlagMismatch { expected: bool },

    #[error("slot flags do not match R-matrix kind {0}")]
    KindMismatch(crate::rmatrix::RKind),

    #[error("no R-matrix is provided for plain ⊗ dual")]
    UnsupportedKind,

    #[error("not a composition: {0:?}")]
    InvalidComposition(Vec<i64>),

    #[error("composition sum mismatch: expected s = {expected}, found {found}")]
    WeightMismatch { expected: u32, found: u32 },

    #[error("no composition satisfies exactly one A.3 case: {0:?}")]
    AmbiguousCase(Vec<u32>),

    #[error("cannot parse coefficient {0:?}")]
    ParseCoefficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;
