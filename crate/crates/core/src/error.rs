use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("empty weight vector")]
    EmptyWeight,

    #[error("weight entries must be positive integers (entry {index} is {value})")]
    NonPositiveWeight { index: usize, value: u64 },

    #[error("sector label {0} is outside [0, 1)")]
    SectorOutOfRange(String),

    #[error("sector {label} has no fixed point in WP({weight})")]
    EmptyFixedLocus { label: String, weight: String },

    #[error("missing pairing with divisor {0}")]
    MissingPairing(String),

    #[error("invalid marking {index}: {reason}")]
    InvalidMarking { index: usize, reason: String },

    #[error("contact congruence violated at marking {0}")]
    ContactCongruence(usize),

    #[error("zero contact order at smooth point")]
    ZeroContactOrder,

    #[error("length mismatch: {markings} markings but {labels} labels")]
    LengthMismatch { markings: usize, labels: usize },

    #[error("inconsistent degeneration component: {0}")]
    InconsistentComponent(String),

    #[error("outside proven range: n = {n}, g = {genus}")]
    OutsideProvenRange { n: usize, genus: u32 },

    #[error("certification failed at component {0}")]
    CertificationFailed(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
