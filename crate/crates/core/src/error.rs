use alloc::string::String;

use crate::partition::Partition;

/// Failure modes shared by every exact and numeric routine in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("partition {partition} has {len} parts but the cone has rank {rank}")]
    PartitionTooLong {
        partition: Partition,
        len: usize,
        rank: usize,
    },

    #[error("pole of the gamma function in factor {index}")]
    GammaPole { index: usize },

    #[error("pochhammer symbol ({what}) vanishes at partition {partition}")]
    PochhammerPole { what: String, partition: Partition },

    #[error("hypergeometric route unavailable: (nu)_k vanishes for some k <= {degree}")]
    RouteUnavailable { degree: usize },

    #[error("interpolation system is singular ({0})")]
    Unisolvent(String),

    #[error("coincident coordinates {i} and {j}")]
    SingularPoint { i: usize, j: usize },

    #[error("denominator vanishes: {0}")]
    ZeroDenominator(String),

    #[error("series truncated at degree {have}, need {need}")]
    Truncation { have: usize, need: usize },

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("quadrature diagnostic: {0}")]
    Quadrature(String),

    #[error("singular Hankel system at order {0}")]
    SingularHankel(usize),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
