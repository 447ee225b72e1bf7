use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("unsupported field size {p}^{e}")]
    UnsupportedField { p: u32, e: u32 },
    #[error("operands belong to incompatible structures")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("specialization point makes a denominator or the discriminant vanish")]
    BadSpecialization,
    #[error("insufficient precision: requested t^{requested}, available t^{available}")]
    InsufficientPrecision { requested: u64, available: u64 },
    #[error("constant coefficient must be 1")]
    NotNormalized,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
