use thiserror::Error;

/// Errors raised by the library. Identity failures that are expected to be
/// impossible for well-formed input surface as [`Error::Falsification`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("missing structure: {0}")]
    MissingStructure(&'static str),

    #[error("axiom failure: {0}")]
    AxiomFailure(String),

    #[error("functional is degenerate (singular Gram matrix)")]
    DegenerateFunctional,

    #[error("no right norm solves phi*n = epsilon")]
    NormNotFound,

    #[error("not a Frobenius algebra: {0}")]
    NotFrobenius(String),

    #[error("not a Hopf subalgebra: {condition} fails at {witness}")]
    NotHopfSubalgebra { condition: String, witness: String },

    #[error("integral of H is not in H * t_K")]
    LambdaHatUnsolvable,

    #[error("twist does not preserve the inner base subalgebra")]
    TwistDoesNotPreserveBase,

    #[error("map is not invertible")]
    NotInvertible,

    #[error("identity falsified: {0}")]
    Falsification(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    /// Exit status for the command-line contract: `1` when a mathematical
    /// identity expected to hold failed, `2` when the input is at fault.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Falsification(_)
            | Error::Internal(_)
            | Error::NormNotFound
            | Error::LambdaHatUnsolvable
            | Error::TwistDoesNotPreserveBase => 1,
            _ => 2,
        }
    }
}
