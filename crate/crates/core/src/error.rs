use thiserror::Error;

/// Errors raised by the arithmetic layers and the identity registry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {p}^{power}")]
    NotInvertible { value: u64, p: u64, power: u8 },

    #[error("element at position {position} ({value}) is not invertible modulo {p}^{power}")]
    BatchNotInvertible {
        position: usize,
        value: u64,
        p: u64,
        power: u8,
    },

    #[error("denominator {denominator} is divisible by {p}")]
    DenominatorNotCoprime { denominator: String, p: u64 },

    #[error("modulus power must be 1 or 2, got {0}")]
    UnsupportedPower(u8),

    #[error("{0} is not a prime below 2^32")]
    BadPrime(u64),

    #[error("invalid index {0:?}")]
    ParseIndex(String),

    #[error("invalid prime range {0:?}")]
    ParseRange(String),

    #[error("word does not end in y: {0}")]
    NotInH1(String),

    #[error("Bernoulli index {0} exceeds the exact-arithmetic cap of {cap}", cap = crate::bernoulli::EXACT_CAP)]
    BernoulliCap(usize),

    #[error("beta_k requires k >= 2, got {0}")]
    BetaIndex(u32),

    #[error("brute-force cost guard exceeded (p = {p}, depth = {depth})")]
    CostGuard { p: u64, depth: usize },

    #[error("multinomial parts do not sum to {0}")]
    Multinomial(u64),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("invalid parameters for {id}: {reason}")]
    InvalidParams { id: String, reason: String },

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
