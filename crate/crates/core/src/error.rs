use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("matrix is not in the Heisenberg group: {0}")]
    NotHeisenberg(String),

    #[error("Heisenberg dimension must be at least 3, got {0}")]
    DimensionTooSmall(usize),

    #[error("empty product sequence")]
    EmptySequence,

    #[error("generator index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("exponent must be a positive integer")]
    NonPositiveExponent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed instance: {0}")]
    Malformed(String),

    #[error("word is not a solution of the PCP instance: {0}")]
    NotAPcpSolution(String),

    #[error("witness does not evaluate to the identity")]
    WitnessRejected,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
