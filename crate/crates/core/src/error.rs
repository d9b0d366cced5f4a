use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("the zero polynomial has no roots to list")]
    ZeroPolynomial,

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected a homogeneous ideal")]
    NotHomogeneous,

    #[error("ideal quotient by the zero ideal")]
    QuotientByZero,

    #[error("saturation did not stabilize within {0} rounds")]
    SaturationCap(usize),

    #[error("Hilbert function did not stabilize (regularity not reached); values {values:?}")]
    RegularityNotReached { values: Vec<(u32, u64)> },

    #[error("Hilbert polynomial of degree {0} exceeds the supported range (curves and surfaces only)")]
    FitDegreeTooLarge(usize),

    #[error("divisor class has half-integral arithmetic genus (D^2 + D.K = {0})")]
    ParityViolation(i64),

    #[error("divisor classes live on different lattices")]
    LatticeMismatch,

    #[error("linear system is empty (expected dimension {expected}, actual {actual})")]
    EmptySystem { expected: i64, actual: usize },

    #[error("unlucky sample: {0}")]
    UnluckySample(String),

    #[error("only {found} rational points found, {wanted} requested (try a larger prime)")]
    NotEnoughPoints { found: usize, wanted: usize },

    #[error("expected a zero-dimensional scheme, got projective dimension {0}")]
    NotZeroDimensional(i64),

    #[error("degenerate position: {0}")]
    Degenerate(String),

    #[error("malformed liaison data: {0}")]
    MalformedSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {claim}")]
    Verification { claim: String },

    #[error("retry budget exhausted after {attempts} attempts: {last}")]
    RetriesExhausted { attempts: u32, last: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
