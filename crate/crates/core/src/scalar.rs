//! The scalar abstraction shared by every structure in the crate.
//!
//! All algebraic structures are generic over a [`Field`]. Verdicts are
//! decided by exact equality, so only exact fields implement the trait:
//! [`Cyclotomic`](crate::cyclotomic::Cyclotomic) (the general case) and
//! [`BigRational`] (enough whenever every bicharacter value is `±1`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field of characteristic zero that may contain roots of unity.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_rational(q: BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ζ_order^exponent`, or `None` if the field does not contain it.
    fn root_of_unity(order: u32, exponent: u32) -> Option<Self>;

    fn scale(&self, c: &Self) -> Self {
        self.clone() * c
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn root_of_unity(order: u32, exponent: u32) -> Option<Self> {
        if order == 0 {
            return None;
        }
        let k = exponent % order;
        if k == 0 {
            Some(BigRational::one())
        } else if 2 * k == order {
            Some(-BigRational::one())
        } else {
            None
        }
    }
}

/// Renders a rational as `a` or `a/b`.
pub(crate) fn rational_literal(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders `|q|` as `a` or `a/b`.
pub(crate) fn abs_rational_literal(q: &BigRational) -> String {
    rational_literal(&q.abs())
}
