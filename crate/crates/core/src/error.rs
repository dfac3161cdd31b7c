use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("characteristic {0} is not a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("colon by the zero ideal is undefined")]
    ZeroColon,
    #[error("closure with respect to the zero module is undefined")]
    ZeroModule,
    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid system of parameters: {0}")]
    InvalidSystemOfParameters(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("malformed sample: {0}")]
    MalformedSample(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
