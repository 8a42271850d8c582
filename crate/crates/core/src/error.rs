use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of the generators is {gcd}, expected 1")]
    GcdNotOne { gcd: u64 },
    #[error("divisor p must be at least 1")]
    InvalidDivisor,
    #[error("{what} needs {requested} cells, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    #[error("{m} is not a member of the semigroup")]
    NotAMember { m: u64 },
    #[error("membership table up to {bound} is not certified")]
    Uncertified { bound: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("rational function has a pole at zero")]
    PoleAtZero,
    #[error("generator {value} is divisible by p = {p}")]
    NotCoprimePart { value: u64, p: u64 },
    #[error("no residue-pattern row matches: {reason}")]
    NoMatchingRow { reason: String },
    #[error("closed form could not be certified up to horizon {horizon}")]
    CertificationFailed { horizon: u64 },
    #[error("numerator has a negative coefficient at x^{exponent}")]
    NegativeNumerator { exponent: usize },
    #[error("denominator factors {first} and {second} are not coprime")]
    NonCoprimeFactors { first: usize, second: usize },
    #[error("factor is not invertible modulo factor {index}")]
    NotInvertible { index: usize },
    #[error("internal cross-check failed: {0}")]
    InternalMismatch(String),
    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),
    #[error("parse error: {0}")]
    Parse(String),
}
