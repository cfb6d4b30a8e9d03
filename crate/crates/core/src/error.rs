use thiserror::Error;

use crate::bigmath::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("modulus {0} must be at least 2")]
    InvalidModulus(Integer),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: Integer, modulus: Integer },
    #[error("denominator {denominator} is not coprime to modulus {modulus}")]
    DenominatorNotCoprime {
        denominator: Integer,
        modulus: Integer,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("denominator is not coprime to [{modulus}]")]
    DenominatorNotCoprime { modulus: u64 },
    #[error("rational function has a pole at q = {0}")]
    SingularPoint(Rational),
    #[error("q-integer modulus must be positive, got {0}")]
    InvalidModulus(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("q-congruences are only claimed for odd n, got {0}")]
    EvenN(u64),
    #[error("direct sum and closed form disagree at {instance}: {direct} vs {closed}")]
    OracleMismatch {
        instance: u64,
        direct: String,
        closed: String,
    },
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
