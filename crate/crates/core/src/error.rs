use thiserror::Error;

/// Errors raised by the graph, field, group and formula kernels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{value} does not divide {modulus}")]
    NotDivisible { value: u128, modulus: u128 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("characteristic must be an odd prime, got {0}")]
    BadCharacteristic(u64),

    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u128),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not in {0}")]
    NotInGroup(String),

    #[error("non-integral exponent {num}/{den} for Jordan type {ty}")]
    NonIntegral { num: i64, den: i64, ty: String },

    #[error("cache file: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
