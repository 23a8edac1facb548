use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {q} exceeds the configured maximum {max}")]
    TooLarge { q: u64, max: u64 },
    #[error("extension degree must be at least 1 (got {0})")]
    InvalidDegree(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("element index {index} is out of range for F_{q}")]
    InvalidElement { index: u64, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no discrete logarithm")]
    ZeroLog,
    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("embedding requires {from} to divide {to}")]
    InvalidEmbedding { from: u32, to: u32 },
    #[error("characters live over different fields: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("character exponent {m} is out of range for F_{q} (expected 0..{})", q - 1)]
    InvalidCharacter { m: u64, q: u32 },
    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: i64 },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("undefined at this assignment: {0}")]
    Undefined(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("exhaustive domain has {size} assignments, above the cap {cap}; use sampled mode")]
    CapExceeded { size: u128, cap: u128 },
    #[error("series diverges: {0}")]
    Diverged(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
