use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, RationalFunction};

use super::basis::BasisKey;

/// A finite linear combination of basis elements E_I T_w with no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<F> {
    n: usize,
    terms: BTreeMap<BasisKey, F>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, key: BasisKey, c: F) -> Self {
        let mut out = Self::zero(n);
        out.add_term(key, c);
        out
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BasisKey, F)>) -> Self {
        let mut out = Self::zero(n);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: BasisKey) -> F {
        self.terms.get(&key).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, key: BasisKey, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub(crate) fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    /// Coordinates in the basis ordering of [`super::BasisTables::key_index`].
    pub fn to_dense(&self, perm_count: usize, dim: usize) -> Vec<F> {
        let mut out = vec![F::zero(); dim];
        for (k, c) in &self.terms {
            out[k.partition as usize * perm_count + k.perm as usize] = c.clone();
        }
        out
    }

    /// Sparse coordinates `(index, coefficient)` sorted by index.
    pub fn to_sparse(&self, perm_count: usize) -> Vec<(usize, F)> {
        self.terms
            .iter()
            .map(|(k, c)| (k.partition as usize * perm_count + k.perm as usize, c.clone()))
            .collect()
    }

    pub fn from_sparse(n: usize, perm_count: usize, coords: impl IntoIterator<Item = (usize, F)>) -> Self {
        Self::from_terms(
            n,
            coords.into_iter().map(|(i, c)| {
                (
                    BasisKey {
                        partition: (i / perm_count) as u32,
                        perm: (i % perm_count) as u32,
                    },
                    c,
                )
            }),
        )
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<AlgebraElement<G>> {
        let mut out = AlgebraElement::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(*k, f(c)?);
        }
        Ok(out)
    }
}

impl AlgebraElement<RationalFunction> {
    /// Specializes s = √u to a value in another field.
    pub fn specialize<G: Field>(&self, s: &G) -> Result<AlgebraElement<G>> {
        self.try_map(|c| c.map_into(s))
    }
}

impl<F: Field> Add for AlgebraElement<F> {
    type Output = Self;

    /// Panics on mismatched `n`; use [`AlgebraElement::checked_add`] otherwise.
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("adding elements of different algebras")
    }
}

impl<F: Field> Sub for AlgebraElement<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("subtracting elements of different algebras")
    }
}

impl<F: Field> Neg for AlgebraElement<F> {
    type Output = Self;

    fn neg(self) -> Self {
        AlgebraElement {
            n: self.n,
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}
