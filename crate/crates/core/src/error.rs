use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// The condition a lattice label fails when it cannot name an NL divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `n = β²` is odd, but the K3 lattice is even.
    OddSelfIntersection,
    /// `Δ = d² − (2g−2)n ≤ 0`, so the lattice is not of signature (1,1).
    NonPositiveDiscriminant,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddSelfIntersection => f.write_str("self-intersection n is odd"),
            Violation::NonPositiveDiscriminant => f.write_str("discriminant d^2 - (2g-2)n is not positive"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u32),

    #[error("invalid divisor D^{g}_{{{d},{n}}}: {violation}")]
    InvalidDivisor {
        g: u32,
        d: BigInt,
        n: BigInt,
        violation: Violation,
    },

    #[error("invalid source class (d={d}, n={n}) in genus {g}: {violation}")]
    InvalidSource {
        g: u32,
        d: BigInt,
        n: BigInt,
        violation: Violation,
    },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("Jacobi symbol ({a}/{b}) undefined: denominator must be odd and positive")]
    JacobiDomain { a: BigInt, b: BigInt },

    #[error("rank formula is not integral at g={g}: {value}")]
    NonIntegralRho { g: u32, value: BigRational },

    #[error("genus {g} is not supported here (supported: {supported:?})")]
    UnsupportedGenus { g: u32, supported: &'static [u32] },

    #[error("search bound {bound} is below the required minimum {required}")]
    BoundTooSmall { bound: BigInt, required: BigInt },

    #[error("invalid canonical divisor (g={g}, delta={delta}, r={r}): {reason}")]
    InvalidCanonical {
        g: u32,
        delta: BigInt,
        r: u32,
        reason: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
