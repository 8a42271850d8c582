//! Exact arithmetic kernel.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! polynomials are dense, rational functions are kept gcd-reduced with a monic
//! denominator so that equality is plain field-wise comparison.
//!
//! Polynomials are generic over a [`Field`] so the same code serves both
//! `ℚ[x]` ([`Poly`]) and `ℚ(x)[λ]` (`DensePoly<RationalFunction>`), which is
//! what the constant-term engine works in.

mod poly;
mod ratfunc;
mod series;

use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num::{One, Zero};

pub use num::{BigInt, BigRational, BigUint};
pub use poly::{DensePoly, Poly};
pub use ratfunc::RationalFunction;
pub use series::{series_from_rational, TruncatedSeries};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Field for BigRational {}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
