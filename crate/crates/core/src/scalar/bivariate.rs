//! Polynomials in the trace parameters A and B over a coefficient field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::parse::{parse_expr, FromBigInt};
use super::{Field, RationalFunction};
use crate::error::{Error, Result};

/// Exponent pair `(deg_A, deg_B)`.
pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly2<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly2<F> {
    pub fn constant(c: F) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly2 { terms }
    }

    pub fn a() -> Self {
        Self::monomial(F::one(), (1, 0))
    }

    pub fn b() -> Self {
        Self::monomial(F::one(), (0, 1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        for (m, v) in &other.terms {
            let entry = self.terms.entry(*m).or_insert_with(F::zero);
            *entry = entry.clone() + c.clone() * v.clone();
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    /// Substitutes `A = c * B`, leaving a polynomial in B only.
    pub fn substitute_a(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for ((da, db), v) in &self.terms {
            let coeff = v.clone() * c.pow(*da);
            out.add_scaled(&coeff, &Self::monomial(F::one(), (0, da + db)));
        }
        out
    }

    /// Evaluates at `A = a`, `B = b`.
    pub fn evaluate(&self, a: &F, b: &F) -> F {
        self.terms
            .iter()
            .fold(F::zero(), |acc, ((da, db), v)| acc + v.clone() * a.pow(*da) * b.pow(*db))
    }

    /// Applies a map to every coefficient.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Poly2<G>> {
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let w = f(v)?;
            if !w.is_zero() {
                terms.insert(*m, w);
            }
        }
        Ok(Poly2 { terms })
    }

    pub fn checked_div_scalar(&self, c: &F) -> Result<Self> {
        Ok(self.scale(&c.checked_inv()?))
    }

    /// Terms sorted for display: higher total degree first, then higher A-degree.
    fn display_order(&self) -> Vec<(&Monomial, &F)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse((m.0 + m.1, m.0)));
        terms
    }
}

impl Poly2<RationalFunction> {
    /// Substitutes rational values for s, A and B.
    pub fn evaluate_at(&self, s: &BigRational, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for ((da, db), v) in &self.terms {
            acc += v.evaluate(s)? * a.pow(*da as i32) * b.pow(*db as i32);
        }
        Ok(acc)
    }
}

impl<F: Field> Zero for Poly2<F> {
    fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> One for Poly2<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for Poly2<F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&F::one(), &rhs);
        self
    }
}

impl<F: Field> Sub for Poly2<F> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&-F::one(), &rhs);
        self
    }
}

impl<F: Field> Neg for Poly2<F> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-F::one())
    }
}

impl<F: Field> Mul for Poly2<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), v1) in &self.terms {
            for ((a2, b2), v2) in &rhs.terms {
                out.add_scaled(&(v1.clone() * v2.clone()), &Self::monomial(F::one(), (a1 + a2, b1 + b2)));
            }
        }
        out
    }
}

impl<F: Field> FromBigInt for Poly2<F> {
    fn from_bigint(c: &BigInt) -> Self {
        Self::constant(F::from_bigint(c))
    }
}

fn needs_parens(text: &str) -> bool {
    text.char_indices().any(|(i, c)| (i > 0 && (c == '+' || c == '-')) || c == '/')
}

fn monomial_text((da, db): Monomial) -> String {
    let mut out = String::new();
    for (name, d) in [("A", da), ("B", db)] {
        match d {
            0 => {}
            1 => out.push_str(name),
            d => out.push_str(&format!("{name}^{d}")),
        }
    }
    out
}

impl<F: Field> fmt::Display for Poly2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.display_order() {
            let body = monomial_text(*m);
            let coeff = c.to_string();
            let term = if body.is_empty() {
                coeff
            } else if c.is_one() {
                body
            } else if (-c.clone()).is_one() {
                format!("-{body}")
            } else if needs_parens(&coeff) {
                format!("({coeff}){body}")
            } else {
                format!("{coeff}{body}")
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl<F: Field> fmt::Debug for Poly2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl FromStr for Poly2<RationalFunction> {
    type Err = Error;

    /// Parses polynomials in A, B with coefficients in Q(s); division is only
    /// allowed by expressions free of A and B.
    fn from_str(text: &str) -> Result<Self> {
        let div = |a: Self, b: Self| -> Result<Self> {
            if b.terms.keys().any(|m| *m != (0, 0)) {
                return Err(Error::Parse("division by a polynomial in A, B".into()));
            }
            a.checked_div_scalar(&b.coeff((0, 0)))
        };
        parse_expr(text)?.eval_with(
            &|name| match name {
                "s" => Ok(Self::constant(RationalFunction::s())),
                "u" => Ok(Self::constant(RationalFunction::u())),
                "A" => Ok(Self::a()),
                "B" => Ok(Self::b()),
                other => Err(Error::Parse(format!("unknown variable {other:?}"))),
            },
            &div,
        )
    }
}
