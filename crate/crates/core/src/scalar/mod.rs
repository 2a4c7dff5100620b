//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. The engine is run
//! over [`RationalFunction`] (the field Q(s) with s = √u) for symbolic
//! results, over [`BigRational`] at a rational specialization of s, and over
//! the prime field [`Fp`] when only ranks are needed at a specialization.

mod bivariate;
mod fp;
mod intpoly;
mod parse;
mod rational_function;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use bivariate::Poly2;
pub use fp::Fp;
pub use intpoly::IntPoly;
pub use parse::{parse_expr, Expr};
pub use rational_function::RationalFunction;

use crate::error::{Error, Result};

/// A commutative field with exact (or, for `f64`, best-effort) arithmetic.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn checked_inv(&self) -> Result<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.checked_inv()?)
    }

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number; fails if the denominator is not invertible.
    fn from_rational(q: &BigRational) -> Result<Self>;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Field for BigRational {
    fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }
}

/// Floating-point coefficients. Zero tests are exact, so identities that
/// hold symbolically may fail by rounding; use only for numerical previews.
impl Field for f64 {
    fn checked_inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(q: &BigRational) -> Result<Self> {
        q.to_f64().ok_or_else(|| Error::Parse(format!("{q} is not representable as f64")))
    }
}

/// Parses a rational literal such as `5/7`, `-3`, or `3/2`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational number: {text:?}")))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}
