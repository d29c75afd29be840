use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{degree}: {reason}")]
    InvalidPermutation { degree: usize, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("permutation is not the canonical representative of its conjugacy class")]
    NonCanonical,

    #[error("degree {0} is outside the supported range 1..={max}", max = crate::MAX_DEGREE)]
    DegreeOutOfRange(usize),

    #[error("partition {partition} sums to {sum}, expected degree {degree}")]
    PartitionSum {
        partition: String,
        sum: usize,
        degree: usize,
    },

    #[error("Riemann-Hurwitz parity failure: Euler characteristic of the cover would be odd")]
    Parity,

    #[error("Riemann-Hurwitz relation forces negative cover genus ({twice_genus}/2)")]
    NegativeGenus { twice_genus: i64 },

    #[error("cover genus is {derived}, but {expected} was expected")]
    GenusMismatch { expected: usize, derived: usize },

    #[error("operation needs exactly 3 branching points, datum has {0}")]
    NotThreePoints(usize),

    #[error("brute-force oracle is capped at degree {max}, got {degree}")]
    OracleDegree { degree: usize, max: usize },

    #[error("invalid constellation pair: {0}")]
    InvalidPair(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
