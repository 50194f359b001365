use thiserror::Error;

/// Errors raised by the quaternion, lattice and factoring routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("doubled coordinates do not share a common parity")]
    MixedParity,
    #[error("division by zero")]
    DivisionByZero,
    #[error("both arguments are zero")]
    BothZero,
    #[error("argument must be nonzero")]
    ZeroInput,
    #[error("argument is not a Lipschitz integer")]
    NotLipschitz,
    #[error("argument is not primitive")]
    NotPrimitive,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{value} exceeds the enumeration bound {bound}")]
    BoundExceeded { value: u64, bound: u64 },
    #[error("prime is not congruent to 1 modulo 4")]
    BadResidueClass,
    #[error("{0} is not a sum of two squares of the required form")]
    NotRepresentable(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("quaternion has even norm")]
    EvenNorm,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// Stable variant name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MixedParity => "MixedParity",
            Error::DivisionByZero => "DivisionByZero",
            Error::BothZero => "BothZero",
            Error::ZeroInput => "ZeroInput",
            Error::NotLipschitz => "NotLipschitz",
            Error::NotPrimitive => "NotPrimitive",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::BadResidueClass => "BadResidueClass",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::ModelMismatch(_) => "ModelMismatch",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::EvenNorm => "EvenNorm",
            Error::Parse { .. } => "ParseError",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
