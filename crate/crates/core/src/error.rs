use num_bigint::BigInt;
use thiserror::Error;

use crate::galois::GaloisLabel;

/// Errors raised by the arithmetic, polynomial and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("trinomial coefficients must satisfy a*b != 0 and m >= 1 (got m={m}, a={a}, b={b})")]
    InvalidTrinomial { m: u32, a: i64, b: i64 },
    #[error("unknown Galois label {0:?}")]
    InvalidLabel(String),
    #[error("polynomial moduli differ ({0} vs {1})")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not a prime modulus")]
    NotPrime(BigInt),
    #[error("prime {0} does not fit a machine word")]
    PrimeTooLarge(BigInt),
    #[error("polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),
    #[error("prime {q} does not divide the discriminant {disc}")]
    PrimeNotInDiscriminant { q: BigInt, disc: BigInt },
    #[error("composition exponent must be at least 2 (got {0})")]
    InvalidExponent(u32),
    #[error("(a^2 + 3)/4 is not an integer for a = {0}")]
    NonIntegralFamily(i64),
    #[error("prime bound must be at least {min} (got {got})")]
    PrimeBoundTooSmall { got: u64, min: u64 },
    #[error("group pair ({0}, {1}) cannot occur for an irreducible x^12 + a x^6 + b")]
    ImpossiblePair(GaloisLabel, GaloisLabel),
    #[error("Frobenius cycle type {cycle_type:?} at p = {prime} is not realizable in {label}")]
    InconsistentEvidence {
        label: GaloisLabel,
        prime: u64,
        cycle_type: Vec<u32>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
