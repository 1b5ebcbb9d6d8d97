//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(q,t)")]
    DivisionByZero,

    #[error("singular specialization")]
    SingularSpecialization,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("variable counts differ: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("non-exact division")]
    NonExactDivision,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("blocks must be separated")]
    BlocksNotSeparated,

    #[error("convention violation: {0}")]
    ConventionViolation(String),

    #[error("planner bug: {0}")]
    PlannerBug(String),

    #[error("polynomial vanishes under this symmetrization")]
    VanishingSymmetrization,

    #[error("modulus mismatch: expected {expected}, got {got}")]
    ModulusMismatch { expected: u32, got: u32 },

    #[error("input is not homogeneous")]
    NotHomogeneous,

    #[error("basis peeling failed")]
    PeelingFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
