use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("slit count must be at least 2, got {0}")]
    InvalidSlitCount(u64),
    #[error("argument must be finite, got {0}")]
    NonFinite(f64),
    #[error("invalid range [{lo}, {hi}] with step {step}")]
    InvalidRange { lo: f64, hi: f64, step: f64 },
    #[error("input must be a positive integer, got 0")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bound must be at least 2, got {0}")]
    BoundTooSmall(u64),
    #[error("invalid evaluation config: {0}")]
    InvalidConfig(String),
    #[error("prime list is not a gap-free prefix of the primes: {0}")]
    SeedGap(String),
    #[error("prime {0} listed more than once")]
    DuplicatePrime(u64),
    #[error("target {target} is below the seed frontier {frontier}")]
    TargetBelowFrontier { target: u64, frontier: u64 },
    #[error("Dirichlet exponent must exceed 1, got {0}")]
    DivergentExponent(f64),
    #[error("segment length must be positive and finite, got {0}")]
    InvalidLength(f64),
    #[error("argument {value} exceeds the supported maximum {max}")]
    OutOfRange { value: u64, max: u64 },
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
