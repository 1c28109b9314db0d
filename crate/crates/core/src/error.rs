use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor must have leading coefficient +1 or -1")]
    NonUnitLeadingCoefficient,
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(u64),
    #[error("generators have gcd {0}; the complement is infinite")]
    GcdNotOne(u64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(u64),
    #[error("invalid family parameters n = {n}, t = {t}: {reason}")]
    InvalidFamily { n: u64, t: u64, reason: String },
    #[error("n = {n} is below the required threshold {threshold}")]
    BelowThreshold { n: u64, threshold: u64 },
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid polynomial literal: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
