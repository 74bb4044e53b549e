//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation images: {0}")]
    InvalidPermutation(String),

    #[error("rank mismatch: word has rank {word_rank}, braid has {strands} strands")]
    RankMismatch { word_rank: usize, strands: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("free word exceeded length bound {bound}")]
    FreeWordTooLong { bound: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "search budget exhausted after completing fraction {completed_fraction:.3} of the space"
    )]
    BudgetExceeded { completed_fraction: f64 },

    #[error("parameters (n={n}, m={m}) exceed the default search gate; pass an explicit override")]
    SearchGate { n: usize, m: usize },

    #[error("degree {degree} too large for exhaustive conjugator scan (bound {bound})")]
    ScanDegreeTooLarge { degree: usize, bound: usize },

    #[error("group closure exceeded enumeration bound {bound}")]
    ClosureBound { bound: usize },

    #[error("vector has length {got}, expected {expected}")]
    VectorLength { got: usize, expected: usize },

    #[error("chain of length {length} does not fit on a genus {g} surface (bound {bound})")]
    ChainTooLong {
        length: usize,
        g: usize,
        bound: usize,
    },

    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,

    #[error("transvecting element does not commute with generator image {index}")]
    NonCommuting { index: usize },

    #[error("unknown audit case id: {0}")]
    UnknownCase(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
