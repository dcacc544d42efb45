use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("the zero ideal has no minimal primes")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("generator {0} is not of degree 2")]
    NotQuadratic(String),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("the void complex has no f-vector, h-vector or homology")]
    VoidComplex,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("generator {0} is not divisible by any variable of the chosen prime")]
    NotInPrime(String),

    #[error("space V_{0} is empty")]
    EmptySpace(usize),

    #[error("Hilbert function not attainable at degree {degree}: {reason}")]
    Unattainable { degree: usize, reason: String },

    #[error("complex is not flag: minimal non-face {0:?} has size {1}")]
    NotFlag(Vec<usize>, usize),

    #[error("complex is not Cohen-Macaulay over {field}: link of face {face:?} has nonzero reduced homology in degree {degree}")]
    NotCohenMacaulay {
        field: String,
        face: Vec<usize>,
        degree: usize,
    },

    #[error("certificate check failed: {0}")]
    CertificateFailed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
