//! The field Q(s) of rational functions in s = √u.
//!
//! Canonical form: numerator and denominator are integer polynomials with no
//! common polynomial factor, the gcd of all their integer coefficients is 1,
//! and the leading coefficient of the denominator is positive. Two values are
//! equal as field elements exactly when their stored forms are identical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::parse::parse_expr;
use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        Self::normalize(num, IntPoly::one())
    }

    pub fn from_integer(c: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    /// The generator s = √u.
    pub fn s() -> Self {
        Self::from_poly(IntPoly::monomial(BigInt::one(), 1))
    }

    /// u = s².
    pub fn u() -> Self {
        Self::from_poly(IntPoly::monomial(BigInt::one(), 2))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Substitutes a rational value for s.
    pub fn evaluate(&self, s: &BigRational) -> Result<BigRational> {
        let embed = |c: &BigInt| BigRational::from_integer(c.clone());
        let d = self.den.eval_with(s, embed);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_with(s, embed) / d)
    }

    /// Maps into another field by substituting `s` for the generator.
    pub fn map_into<F: Field>(&self, s: &F) -> Result<F> {
        let embed = |c: &BigInt| {
            F::from_rational(&BigRational::from_integer(c.clone())).expect("integers embed")
        };
        let d = self.den.eval_with(s, embed);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = self.num.eval_with(s, embed);
        n.checked_div(&d)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return Self::normalize(self.num.add(&rhs.num), self.den);
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&rhs.den))
    }
}

impl Sub for RationalFunction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;

    fn neg(self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction {
                num: self.num.mul(&rhs.num),
                den: self.den,
            };
        }
        // Cross-cancel before multiplying to keep the gcd small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = (self.num.div_exact(&g1), rhs.den.div_exact(&g1));
        let (n2, d1) = (rhs.num.div_exact(&g2), self.den.div_exact(&g2));
        Self::normalize(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Field for RationalFunction {
    fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    fn from_i64(v: i64) -> Self {
        Self::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &BigRational) -> Result<Self> {
        Self::new(
            IntPoly::constant(q.numer().clone()),
            IntPoly::constant(q.denom().clone()),
        )
    }
}

/// Renders the monomial s^k in terms of u = s², e.g. s^5 as `u^2s`.
fn monomial_body(k: usize) -> String {
    let upow = k / 2;
    let mut out = match upow {
        0 => String::new(),
        1 => "u".to_string(),
        p => format!("u^{p}"),
    };
    if k % 2 == 1 {
        out.push('s');
    }
    out
}

/// Renders an integer polynomial in s, highest degree first.
pub(crate) fn render_poly(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = monomial_body(k);
        let term = if body.is_empty() {
            c.to_string()
        } else if c.is_one() {
            body
        } else if *c == -BigInt::one() {
            format!("-{body}")
        } else {
            format!("{c}{body}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

fn term_count(p: &IntPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = render_poly(&self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let num = if term_count(&self.num) > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = render_poly(&self.den);
        if self.den.is_constant() {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)?.eval(&|name| match name {
            "s" => Ok(Self::s()),
            "u" => Ok(Self::u()),
            other => Err(Error::Parse(format!("unknown variable {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(text: &str) -> RationalFunction {
        text.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn delta() -> RationalFunction {
        let u = RationalFunction::u();
        let one = RationalFunction::one();
        (one.clone() - u.clone()).checked_div(&(one + u)).unwrap()
    }

    #[test]
    fn fractions_with_common_denominator_collapse() {
        let u = RationalFunction::u();
        let one = RationalFunction::one();
        let a = (one.clone() - u.clone()).checked_div(&(one.clone() + u.clone())).unwrap();
        let b = (RationalFunction::from_i64(2) * u.clone()).checked_div(&(one.clone() + u)).unwrap();
        assert_eq!(a + b, one);
    }

    #[test]
    fn one_plus_delta() {
        let expected = RationalFunction::from_i64(2)
            .checked_div(&(RationalFunction::one() + RationalFunction::u()))
            .unwrap();
        assert_eq!(RationalFunction::one() + delta(), expected);
    }

    #[test]
    fn s_squared_is_u() {
        assert_eq!(RationalFunction::s() * RationalFunction::s(), RationalFunction::u());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(delta().evaluate(&q(2, 1)).unwrap(), q(-3, 5));
        let alpha = (RationalFunction::one() + RationalFunction::u())
            .checked_div(&RationalFunction::from_i64(2))
            .unwrap();
        assert_eq!(alpha.evaluate(&q(1, 1)).unwrap(), q(1, 1));
    }

    #[test]
    fn evaluate_at_pole_is_error() {
        let f = RationalFunction::one().checked_div(&(RationalFunction::s() - RationalFunction::one())).unwrap();
        assert_eq!(f.evaluate(&q(1, 1)), Err(Error::Pole));
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(RationalFunction::one().checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(RationalFunction::zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_sign_and_content() {
        let a = RationalFunction::new(
            IntPoly::from_coeffs(vec![2.into(), (-2).into()]),
            IntPoly::from_coeffs(vec![(-4).into(), (-4).into()]),
        )
        .unwrap();
        // (2 - 2s)/(-4 - 4s) = (s - 1)/(2s + 2)
        assert_eq!(a.to_string(), "(s-1)/(2s+2)");
    }

    #[test]
    fn rendering() {
        assert_eq!(delta().to_string(), "(-u+1)/(u+1)");
        assert_eq!((RationalFunction::u() - RationalFunction::one()).to_string(), "u-1");
        let s5 = RationalFunction::s().pow(5) * RationalFunction::from_i64(-3);
        assert_eq!(s5.to_string(), "-3u^2s");
        assert_eq!(RationalFunction::from_rational(&q(-1, 2)).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_round_trip_examples() {
        for text in ["(-u+1)/(u+1)", "u-1", "-3u^2s", "1/2", "(u+1)/2", "0", "s/(u^2+3)"] {
            assert_eq!(rf(text).to_string(), text);
        }
        assert_eq!(rf("(1-u)/(1+u)"), delta());
        assert_eq!(rf("s*s"), RationalFunction::u());
    }

    #[test]
    fn gcd_cancellation() {
        // (u - 1)/(s - 1) = s + 1
        assert_eq!(rf("(u-1)/(s-1)"), rf("s+1"));
    }
}
