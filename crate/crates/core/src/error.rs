use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("invalid field element {value} for GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero vector has no projective point")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("points must be distinct")]
    EqualPoints,
    #[error("duplicate point in point set")]
    DuplicatePoint,
    #[error("{what} ({size}) exceeds the configured cap ({cap})")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point set has not been audited")]
    Unaudited,
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
