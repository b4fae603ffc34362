use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be between 1 and {max}, got {rank}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("explicit Weyl group enumeration is capped at rank {cap}, got {rank}")]
    EnumerationCap { rank: usize, cap: usize },

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("({i}, {j}) is not a positive root of A_{rank}")]
    InvalidRoot { i: usize, j: usize, rank: usize },

    #[error("{0:?} is not a permutation of 1..=n")]
    InvalidPermutation(Vec<usize>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid oracle window: box radius {box_radius}, m in [{m_min}, {m_max}]")]
    InvalidWindow {
        box_radius: i64,
        m_min: i64,
        m_max: i64,
    },

    #[error("lattice range must be at least 1, got {0}")]
    InvalidRange(i64),

    #[error("cohomological degree {degree} outside 0..={max}")]
    DegreeOutOfRange { degree: i64, max: usize },

    #[error("ambient dimension must be at least 1, got {0}")]
    InvalidAmbient(i64),

    #[error("malformed Betti profile: {0}")]
    MalformedProfile(String),

    #[error("integer overflow while scaling weight")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
