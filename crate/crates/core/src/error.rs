use alloc::string::String;

/// Failures of exact computations.
///
/// Most variants signal that an identity expected to hold exactly did not,
/// so callers should abort rather than recover.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("exponent {exponent} is not a multiple of {divisor}")]
    ExponentNotDivisible { exponent: i64, divisor: i64 },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("Schur expansion left a nonzero remainder")]
    NonzeroRemainder,
    #[error("negative exponent where a polynomial was required")]
    NegativeExponent,
    #[error("partitions {0} and {1} share an eigenvalue")]
    DegenerateEigenvalue(String, String),
    #[error("coefficient has a pole at t = 0")]
    PoleAtZero,
    #[error("coefficient is not a Laurent polynomial in q")]
    NotLaurentInQ,
    #[error("scaled limit t -> infinity diverges")]
    Divergent,
    #[error("quantum torus division is not exact")]
    NcNotDivisible,
    #[error("invalid occupation numbers: {0}")]
    InvalidNVector(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
