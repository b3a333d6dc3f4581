use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{partition} is not a {t}-core")]
    NotACore { partition: String, t: u64 },
    #[error("invalid V_{t}-coding {coding}: {reason}")]
    InvalidCoding { coding: String, t: u64, reason: String },
    #[error("size formula did not produce a nonnegative integer: {0}")]
    NonIntegerSize(String),
    #[error("invalid half-integer: {0}")]
    InvalidHalfInt(String),
    #[error("selection is not entry-bounded: {0}")]
    InfiniteSelection(String),
    #[error("relation {relation} violated at box ({x}, {y})")]
    RelationViolation { relation: String, x: String, y: String },
    #[error("weight vanishes at argument {0} with a negative exponent")]
    DivisionByZeroWeight(i64),
    #[error("argument 0 carries exponent {0} under odd parity")]
    ZeroArgument(i64),
    #[error("series constant term must be {expected}")]
    BadConstantTerm { expected: &'static str },
    #[error("singular sample: {0}")]
    SingularSample(String),
    #[error("t must be positive")]
    ZeroT,
}
