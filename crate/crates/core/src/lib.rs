//! Cyclic codes over the ring `R = e1*F_{p^k} + e2*F_{p^k} + e3*F_{p^k}`,
//! the subring of `F_{p^k}[v]/(v^{r+1} - v)` spanned by its three orthogonal
//! idempotents.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf`] — exact arithmetic in `F_p` and `F_{p^k}`, including deterministic
//!   construction of the field modulus.
//! * [`polyring`] — polynomials over `F_{p^k}`, factorization of `x^n - 1`,
//!   reciprocals, and the quotient `F_{p^k}[x]/(x^n - 1)`.
//! * [`ring_r`] — arithmetic in `F_{p^k}[v]/(v^{r+1} - v)`, the orthogonal
//!   idempotents `e1, e2, e3`, and triple form on the subring.
//! * [`cyclic`] — cyclic codes over `F_{p^k}`: generator polynomials,
//!   generating idempotents, sums, intersections, duals.
//! * [`rcode`] — codes over the subring: CRT build from component codes,
//!   Gray map, single-generator and idempotent presentations, duals,
//!   self-duality.
//! * [`oracle`] — independent brute-force verification engines (ideal
//!   closure, exhaustive duals, idempotent census) and the theorem
//!   verification suite.
//!
//! Everything is deterministic: field moduli are the lexicographically
//! smallest irreducible polynomials, factor lists and codeword enumerations
//! come out in a fixed canonical order, and randomized checks take explicit
//! seeds.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod cyclic;
pub mod fault;
pub mod gf;
pub mod oracle;
pub mod polyring;
pub mod rcode;
pub mod ring_r;
pub mod text;

pub use gf::{FieldElement, FieldSpec};
pub use polyring::{Poly, QuotientElement};
pub use rcode::{RCode, RCodeword};
pub use ring_r::{RPoly, RingElement, RingSpec, Triple};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` failed the trial-division primality check.
    NotPrime(u32),
    /// A field modulus was rejected (wrong degree, not monic, reducible).
    InvalidModulus(String),
    /// Attempt to invert zero in a field.
    ZeroInversion,
    /// An enumeration would exceed the configured limit.
    LimitExceeded { needed: u128, limit: u64 },
    /// Polynomial division by the zero polynomial.
    DivisionByZeroPoly,
    /// gcd/lcm of two zero polynomials is undefined.
    BothZero,
    /// The code length shares a factor with the field characteristic.
    NotCoprime { n: usize, p: u32 },
    /// The zero polynomial has no reciprocal.
    ZeroPolynomial,
    /// Ring parameters violate `r > 1` or `gcd(r, p) = 1`.
    InvalidSpec(String),
    /// A ring element is outside the subring spanned by the idempotents.
    NotInSubring,
    /// Strict-mode generator that does not divide `x^n - 1`.
    NotADivisor,
    /// Claimed idempotent fails `e^2 = e`.
    NotIdempotent,
    /// Operands belong to different fields, rings, or lengths.
    MixedParameters,
    /// Component polynomials of a dual idempotent must be idempotents.
    NotIdempotentComponents,
    /// Text input that does not conform to the canonical syntax.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidModulus(msg) => write!(f, "invalid field modulus: {msg}"),
            Error::ZeroInversion => write!(f, "division by zero field element"),
            Error::LimitExceeded { needed, limit } => {
                write!(f, "enumeration of {needed} elements exceeds limit {limit}")
            }
            Error::DivisionByZeroPoly => write!(f, "polynomial division by zero"),
            Error::BothZero => write!(f, "gcd/lcm of two zero polynomials"),
            Error::NotCoprime { n, p } => write!(f, "length {n} is divisible by p = {p}"),
            Error::ZeroPolynomial => write!(f, "zero polynomial has no reciprocal"),
            Error::InvalidSpec(msg) => write!(f, "invalid ring parameters: {msg}"),
            Error::NotInSubring => write!(f, "ring element lies outside e1*F + e2*F + e3*F"),
            Error::NotADivisor => write!(f, "generator does not divide x^n - 1"),
            Error::NotIdempotent => write!(f, "polynomial is not idempotent in the quotient"),
            Error::MixedParameters => write!(f, "operands have mixed field/ring/length parameters"),
            Error::NotIdempotentComponents => {
                write!(f, "component polynomials are not idempotents")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

/// Hard ceiling on any enumeration, regardless of configuration.
pub const HARD_ENUMERATION_CEILING: u64 = 1 << 26;

/// Enumeration budgets. Limits are configuration, not constants; both are
/// clamped to [`HARD_ENUMERATION_CEILING`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of field elements `enumerate` will yield.
    pub field_elements: u64,
    /// Maximum size of a codeword set or scan space in the oracle.
    pub set_elements: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_elements: 1 << 20,
            set_elements: 1 << 22,
        }
    }
}

impl Limits {
    /// Override both budgets with one ceiling, clamped to the hard ceiling.
    pub fn with_ceiling(ceiling: u64) -> Self {
        let c = ceiling.min(HARD_ENUMERATION_CEILING);
        Limits {
            field_elements: c,
            set_elements: c,
        }
    }

    pub(crate) fn check_set(&self, needed: u128) -> Result<()> {
        let limit = self.set_elements.min(HARD_ENUMERATION_CEILING);
        if needed > limit as u128 {
            return Err(Error::LimitExceeded { needed, limit });
        }
        Ok(())
    }

    pub(crate) fn check_field(&self, needed: u128) -> Result<()> {
        let limit = self.field_elements.min(HARD_ENUMERATION_CEILING);
        if needed > limit as u128 {
            return Err(Error::LimitExceeded { needed, limit });
        }
        Ok(())
    }
}

/// Deterministic splittable generator for seeded randomized checks
/// (splitmix64). Small enough to avoid pulling a dependency into a
/// `no_std` crate.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
