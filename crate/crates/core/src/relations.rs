//! Catalog of identities among the generators T_i, E_i and the derived
//! elements F_i, L_i, Γ, T_{ij}, checked in any model of the generators.
//!
//! A model supplies images of T_i and E_i and the algebra operations; the
//! catalog builds both sides of every identity instance from those images
//! and asks the model whether they agree. The same catalog therefore runs in
//! the basis engine, in operator representations and modulo an ideal.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Engine};
use crate::error::Result;
use crate::scalar::Field;

/// Images of the generators together with the algebra operations.
pub trait GeneratorModel: Sync {
    type Scalar: Field;
    type Elem: Clone + Send + Sync;

    fn n(&self) -> usize;
    /// Image of √u.
    fn sqrt_u(&self) -> Self::Scalar;
    fn one(&self) -> Self::Elem;
    fn t(&self, i: usize) -> Result<Self::Elem>;
    fn e(&self, i: usize) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, a: &Self::Elem, c: &Self::Scalar) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;

    /// T_i^{-1} = T_i + (u^{-1} - 1) E_i (1 + T_i)
    fn t_inv(&self, i: usize) -> Result<Self::Elem> {
        let (t, e) = (self.t(i)?, self.e(i)?);
        let u = self.sqrt_u() * self.sqrt_u();
        let c = u.checked_inv()? - Self::Scalar::one();
        let one_t = self.add(&self.one(), &t)?;
        self.add(&t, &self.scale(&self.mul(&e, &one_t)?, &c))
    }
}

impl<F: Field> GeneratorModel for Engine<F> {
    type Scalar = F;
    type Elem = AlgebraElement<F>;

    fn n(&self) -> usize {
        Engine::n(self)
    }
    fn sqrt_u(&self) -> F {
        Engine::sqrt_u(self).clone()
    }
    fn one(&self) -> AlgebraElement<F> {
        Engine::one(self)
    }
    fn t(&self, i: usize) -> Result<AlgebraElement<F>> {
        Engine::t(self, i)
    }
    fn e(&self, i: usize) -> Result<AlgebraElement<F>> {
        Engine::e(self, i)
    }
    fn mul(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        Engine::mul(self, a, b)
    }
    fn add(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        a.checked_add(b)
    }
    fn scale(&self, a: &AlgebraElement<F>, c: &F) -> AlgebraElement<F> {
        a.scale(c)
    }
    fn equal(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<bool> {
        Ok(a.checked_sub(b)?.is_zero())
    }
    fn t_inv(&self, i: usize) -> Result<AlgebraElement<F>> {
        Engine::t_inv(self, i)
    }
}

/// Derived elements built from a model's generators.
pub struct Words<'a, M: GeneratorModel> {
    m: &'a M,
}

impl<'a, M: GeneratorModel> Words<'a, M> {
    pub fn new(m: &'a M) -> Self {
        Words { m }
    }

    pub fn model(&self) -> &M {
        self.m
    }

    pub fn k(&self, c: i64) -> M::Scalar {
        M::Scalar::from_i64(c)
    }

    pub fn u(&self) -> M::Scalar {
        self.m.sqrt_u() * self.m.sqrt_u()
    }

    /// 1/(u+1)
    pub fn inv_u1(&self) -> Result<M::Scalar> {
        (self.u() + M::Scalar::one()).checked_inv()
    }

    /// (1-u)/(1+u)
    pub fn delta(&self) -> Result<M::Scalar> {
        Ok((M::Scalar::one() - self.u()) * self.inv_u1()?)
    }

    pub fn one(&self) -> M::Elem {
        self.m.one()
    }

    pub fn t(&self, i: usize) -> Result<M::Elem> {
        self.m.t(i)
    }

    pub fn e(&self, i: usize) -> Result<M::Elem> {
        self.m.e(i)
    }

    pub fn ti(&self, i: usize) -> Result<M::Elem> {
        self.m.t_inv(i)
    }

    pub fn prod(&self, factors: &[M::Elem]) -> Result<M::Elem> {
        let Some((first, rest)) = factors.split_first() else {
            return Ok(self.one());
        };
        let mut acc = first.clone();
        for f in rest {
            acc = self.m.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Σ c_k x_k
    pub fn comb(&self, terms: &[(M::Scalar, M::Elem)]) -> Result<M::Elem> {
        let mut acc = self.m.scale(&self.one(), &M::Scalar::zero());
        for (c, x) in terms {
            acc = self.m.add(&acc, &self.m.scale(x, c))?;
        }
        Ok(acc)
    }

    pub fn sum(&self, terms: &[M::Elem]) -> Result<M::Elem> {
        self.comb(&terms.iter().map(|x| (M::Scalar::one(), x.clone())).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &M::Elem, b: &M::Elem) -> Result<M::Elem> {
        self.m.add(a, &self.m.scale(b, &-M::Scalar::one()))
    }

    pub fn scale(&self, c: &M::Scalar, a: &M::Elem) -> M::Elem {
        self.m.scale(a, c)
    }

    /// (1 + T_i)/(u + 1)
    pub fn f(&self, i: usize) -> Result<M::Elem> {
        Ok(self.scale(&self.inv_u1()?, &self.sum(&[self.one(), self.t(i)?])?))
    }

    /// ½(1 + T_i)(1 + δE_i)
    pub fn l(&self, i: usize) -> Result<M::Elem> {
        let a = self.sum(&[self.one(), self.t(i)?])?;
        let b = self.comb(&[(M::Scalar::one(), self.one()), (self.delta()?, self.e(i)?)])?;
        Ok(self.scale(&self.k(2).checked_inv()?, &self.prod(&[a, b])?))
    }

    /// 1 + T_i + T_j + T_iT_j + T_jT_i + T_iT_jT_i
    pub fn steinberg(&self, i: usize, j: usize) -> Result<M::Elem> {
        let (ti, tj) = (self.t(i)?, self.t(j)?);
        let tij = self.prod(&[ti.clone(), tj.clone()])?;
        let tji = self.prod(&[tj.clone(), ti.clone()])?;
        let tiji = self.prod(&[tij.clone(), ti.clone()])?;
        self.sum(&[self.one(), ti, tj, tij, tji, tiji])
    }

    pub fn gamma(&self) -> Result<M::Elem> {
        self.prod(&(1..self.m.n()).map(|i| self.t(i)).collect::<Result<Vec<_>>>()?)
    }

    pub fn gamma_inv(&self) -> Result<M::Elem> {
        self.prod(&(1..self.m.n()).rev().map(|i| self.ti(i)).collect::<Result<Vec<_>>>()?)
    }

    /// Γ^k x Γ^{-k}
    pub fn gamma_conj(&self, x: &M::Elem, k: usize) -> Result<M::Elem> {
        let (g, gi) = (self.gamma()?, self.gamma_inv()?);
        let mut acc = x.clone();
        for _ in 0..k {
            acc = self.prod(&[g.clone(), acc, gi.clone()])?;
        }
        Ok(acc)
    }

    pub fn gamma_pow(&self, k: usize) -> Result<M::Elem> {
        self.prod(&vec![self.gamma()?; k])
    }

    /// E_{ij} = T_i···T_{j-2} E_{j-1} T_{j-2}^{-1}···T_i^{-1}
    pub fn e_arc(&self, i: usize, j: usize) -> Result<M::Elem> {
        let mut acc = self.e(j - 1)?;
        for k in (i..j - 1).rev() {
            acc = self.prod(&[self.t(k)?, acc, self.ti(k)?])?;
        }
        Ok(acc)
    }

    /// T_i x T_i^{-1}
    pub fn t_conj(&self, i: usize, x: &M::Elem) -> Result<M::Elem> {
        self.prod(&[self.t(i)?, x.clone(), self.ti(i)?])
    }
}

/// Groups of identities that are checked together.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// The defining relations of E_n.
    Defining,
    /// Conjugation by Γ = T_1···T_{n-1}.
    Gamma,
    /// Identities of the idempotents L_i.
    Idempotent,
    /// Moving E_j past F_i.
    Exchange,
    /// Left multiplication of T_{i,i+1} by T-words.
    SteinbergAbsorb,
    /// E_iE_jT_{ij} = 0 and its mirror, true only in the quotient.
    Quotient,
    /// Presentation of the quotient in E_i, F_i.
    FPresentation,
    /// Presentation of the quotient in E_i, L_i.
    LPresentation,
    /// The idempotent presentation of the Temperley-Lieb algebra, for E_i = 1.
    TemperleyLieb,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Defining,
        Family::Gamma,
        Family::Idempotent,
        Family::Exchange,
        Family::SteinbergAbsorb,
        Family::Quotient,
        Family::FPresentation,
        Family::LPresentation,
        Family::TemperleyLieb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Defining => "defining",
            Family::Gamma => "gamma",
            Family::Idempotent => "idempotent",
            Family::Exchange => "exchange",
            Family::SteinbergAbsorb => "steinberg-absorb",
            Family::Quotient => "quotient",
            Family::FPresentation => "f-presentation",
            Family::LPresentation => "l-presentation",
            Family::TemperleyLieb => "temperley-lieb",
        }
    }
}

type Sides<M> = fn(&Words<'_, M>, &[usize]) -> Result<(<M as GeneratorModel>::Elem, <M as GeneratorModel>::Elem)>;

/// One identity with its instance set.
pub struct Relation<M: GeneratorModel> {
    pub family: Family,
    pub id: &'static str,
    pub statement: &'static str,
    pub instances: fn(usize) -> Vec<Vec<usize>>,
    pub sides: Sides<M>,
}

fn singles(n: usize) -> Vec<Vec<usize>> {
    (1..n).map(|i| vec![i]).collect()
}

fn pairs(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if keep(i, j) {
                out.push(vec![i, j]);
            }
        }
    }
    out
}

fn far(n: usize) -> Vec<Vec<usize>> {
    pairs(n, |i, j| i.abs_diff(j) > 1)
}

fn adjacent(n: usize) -> Vec<Vec<usize>> {
    pairs(n, |i, j| i.abs_diff(j) == 1)
}

fn all_pairs(n: usize) -> Vec<Vec<usize>> {
    pairs(n, |_, _| true)
}

/// i with i+1 ≤ n-1
fn lower_of_adjacent(n: usize) -> Vec<Vec<usize>> {
    (1..n.saturating_sub(1)).map(|i| vec![i]).collect()
}

/// i with i+2 ≤ n
fn skip_arcs(n: usize) -> Vec<Vec<usize>> {
    (1..=n.saturating_sub(2)).map(|i| vec![i]).collect()
}

/// The full catalog, in report order.
pub fn catalog<M: GeneratorModel>() -> Vec<Relation<M>> {
    use Family::*;
    vec![
        // ---- defining relations ----
        Relation {
            family: Defining,
            id: "t-commute",
            statement: "T_iT_j = T_jT_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.t(x[0])?, w.t(x[1])?])?, w.prod(&[w.t(x[1])?, w.t(x[0])?])?)),
        },
        Relation {
            family: Defining,
            id: "braid",
            statement: "T_iT_jT_i = T_jT_iT_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (a, b) = (w.t(x[0])?, w.t(x[1])?);
                Ok((w.prod(&[a.clone(), b.clone(), a.clone()])?, w.prod(&[b.clone(), a, b])?))
            },
        },
        Relation {
            family: Defining,
            id: "quadratic",
            statement: "T_i^2 = 1 + (u-1)E_i(1+T_i)",
            instances: singles,
            sides: |w, x| {
                let t = w.t(x[0])?;
                let e = w.e(x[0])?;
                let et = w.prod(&[e.clone(), t.clone()])?;
                let um1 = w.u() - w.k(1);
                Ok((
                    w.prod(&[t.clone(), t])?,
                    w.comb(&[(w.k(1), w.one()), (um1.clone(), e), (um1, et)])?,
                ))
            },
        },
        Relation {
            family: Defining,
            id: "e-commute",
            statement: "E_iE_j = E_jE_i",
            instances: all_pairs,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.e(x[1])?])?, w.prod(&[w.e(x[1])?, w.e(x[0])?])?)),
        },
        Relation {
            family: Defining,
            id: "e-idempotent",
            statement: "E_i^2 = E_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.e(x[0])?])?, w.e(x[0])?)),
        },
        Relation {
            family: Defining,
            id: "et-commute-far",
            statement: "E_iT_j = T_jE_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.t(x[1])?])?, w.prod(&[w.t(x[1])?, w.e(x[0])?])?)),
        },
        Relation {
            family: Defining,
            id: "et-commute",
            statement: "E_iT_i = T_iE_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.t(x[0])?])?, w.prod(&[w.t(x[0])?, w.e(x[0])?])?)),
        },
        Relation {
            family: Defining,
            id: "eet-left",
            statement: "E_iE_jT_i = T_iE_iE_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, ti) = (w.e(x[0])?, w.e(x[1])?, w.t(x[0])?);
                Ok((w.prod(&[ei.clone(), ej.clone(), ti.clone()])?, w.prod(&[ti, ei, ej])?))
            },
        },
        Relation {
            family: Defining,
            id: "eet-middle",
            statement: "T_iE_iE_j = E_jT_iE_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, ti) = (w.e(x[0])?, w.e(x[1])?, w.t(x[0])?);
                Ok((w.prod(&[ti.clone(), ei, ej.clone()])?, w.prod(&[ej.clone(), ti, ej])?))
            },
        },
        Relation {
            family: Defining,
            id: "ett",
            statement: "E_iT_jT_i = T_jT_iE_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, ti, tj) = (w.e(x[0])?, w.e(x[1])?, w.t(x[0])?, w.t(x[1])?);
                Ok((w.prod(&[ei, tj.clone(), ti.clone()])?, w.prod(&[tj, ti, ej])?))
            },
        },
        // ---- conjugation by Γ ----
        Relation {
            family: Gamma,
            id: "gamma-t",
            statement: "T_i = Γ^{i-1}T_1Γ^{-(i-1)}",
            instances: singles,
            sides: |w, x| Ok((w.t(x[0])?, w.gamma_conj(&w.t(1)?, x[0] - 1)?)),
        },
        Relation {
            family: Gamma,
            id: "gamma-steinberg",
            statement: "T_{i,i+1} = Γ^{i-1}T_{1,2}Γ^{-(i-1)}",
            instances: lower_of_adjacent,
            sides: |w, x| Ok((w.steinberg(x[0], x[0] + 1)?, w.gamma_conj(&w.steinberg(1, 2)?, x[0] - 1)?)),
        },
        Relation {
            family: Gamma,
            id: "gamma-e",
            statement: "E_i = Γ^{i-1}E_1Γ^{-(i-1)}",
            instances: singles,
            sides: |w, x| Ok((w.e(x[0])?, w.gamma_conj(&w.e(1)?, x[0] - 1)?)),
        },
        Relation {
            family: Gamma,
            id: "gamma-shift",
            statement: "T_{i+1}Γ^{i-1} = Γ^{i-1}T_2",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let g = w.gamma_pow(x[0] - 1)?;
                Ok((w.prod(&[w.t(x[0] + 1)?, g.clone()])?, w.prod(&[g, w.t(2)?])?))
            },
        },
        Relation {
            family: Gamma,
            id: "gamma-e-skip",
            statement: "E_{i,i+2} = Γ^{i-1}E_{1,3}Γ^{-(i-1)}",
            instances: skip_arcs,
            sides: |w, x| Ok((w.e_arc(x[0], x[0] + 2)?, w.gamma_conj(&w.e_arc(1, 3)?, x[0] - 1)?)),
        },
        // ---- idempotents L_i ----
        Relation {
            family: Idempotent,
            id: "l-idempotent",
            statement: "L_i^2 = L_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.l(x[0])?, w.l(x[0])?])?, w.l(x[0])?)),
        },
        Relation {
            family: Idempotent,
            id: "el-absorb",
            statement: "(1+u)E_iL_i = E_i(1+T_i)",
            instances: singles,
            sides: |w, x| {
                let i = x[0];
                let lhs = w.scale(&(w.u() + w.k(1)), &w.prod(&[w.e(i)?, w.l(i)?])?);
                Ok((lhs, w.prod(&[w.e(i)?, w.sum(&[w.one(), w.t(i)?])?])?))
            },
        },
        Relation {
            family: Idempotent,
            id: "t-from-l",
            statement: "T_i = 2L_i + (u-1)E_iL_i - 1",
            instances: singles,
            sides: |w, x| {
                let i = x[0];
                let rhs = w.comb(&[
                    (w.k(2), w.l(i)?),
                    (w.u() - w.k(1), w.prod(&[w.e(i)?, w.l(i)?])?),
                    (w.k(-1), w.one()),
                ])?;
                Ok((w.t(i)?, rhs))
            },
        },
        Relation {
            family: Idempotent,
            id: "el-equals-ef",
            statement: "E_iL_i = E_iF_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.l(x[0])?])?, w.prod(&[w.e(x[0])?, w.f(x[0])?])?)),
        },
        Relation {
            family: Idempotent,
            id: "f-from-l",
            statement: "F_i = (1+δ)L_i - δE_iL_i",
            instances: singles,
            sides: |w, x| {
                let i = x[0];
                let d = w.delta()?;
                let rhs = w.comb(&[(w.k(1) + d.clone(), w.l(i)?), (-d, w.prod(&[w.e(i)?, w.l(i)?])?)])?;
                Ok((w.f(i)?, rhs))
            },
        },
        // ---- moving E_j past F_i ----
        Relation {
            family: Exchange,
            id: "fe-exchange",
            statement: "F_iE_j = T_iE_jT_i^{-1}F_i + (E_j - T_iE_jT_i^{-1})/(u+1), |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (i, j) = (x[0], x[1]);
                let c = w.t_conj(i, &w.e(j)?)?;
                let rhs = w.comb(&[
                    (w.k(1), w.prod(&[c.clone(), w.f(i)?])?),
                    (w.inv_u1()?, w.sub(&w.e(j)?, &c)?),
                ])?;
                Ok((w.prod(&[w.f(i)?, w.e(j)?])?, rhs))
            },
        },
        Relation {
            family: Exchange,
            id: "ef-exchange",
            statement: "E_jF_i = F_iT_iE_jT_i^{-1} + (E_j - T_iE_jT_i^{-1})/(u+1), |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (i, j) = (x[0], x[1]);
                let c = w.t_conj(i, &w.e(j)?)?;
                let rhs = w.comb(&[
                    (w.k(1), w.prod(&[w.f(i)?, c.clone()])?),
                    (w.inv_u1()?, w.sub(&w.e(j)?, &c)?),
                ])?;
                Ok((w.prod(&[w.e(j)?, w.f(i)?])?, rhs))
            },
        },
        // ---- T-words times T_{i,i+1} ----
        Relation {
            family: SteinbergAbsorb,
            id: "t1-steinberg",
            statement: "T_iT_{i,i+1} = [1+(u-1)E_i]T_{i,i+1}",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let i = x[0];
                let st = w.steinberg(i, i + 1)?;
                let um1 = w.u() - w.k(1);
                let front = w.comb(&[(w.k(1), w.one()), (um1, w.e(i)?)])?;
                Ok((w.prod(&[w.t(i)?, st.clone()])?, w.prod(&[front, st])?))
            },
        },
        Relation {
            family: SteinbergAbsorb,
            id: "t2-steinberg",
            statement: "T_{i+1}T_{i,i+1} = [1+(u-1)E_{i+1}]T_{i,i+1}",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let i = x[0];
                let st = w.steinberg(i, i + 1)?;
                let um1 = w.u() - w.k(1);
                let front = w.comb(&[(w.k(1), w.one()), (um1, w.e(i + 1)?)])?;
                Ok((w.prod(&[w.t(i + 1)?, st.clone()])?, w.prod(&[front, st])?))
            },
        },
        Relation {
            family: SteinbergAbsorb,
            id: "t1t2-steinberg",
            statement: "T_iT_{i+1}T_{i,i+1} = [1+(u-1)E_i+(u-1)E_{i,i+2}+(u-1)^2E_iE_{i+1}]T_{i,i+1}",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let i = x[0];
                let st = w.steinberg(i, i + 1)?;
                let um1 = w.u() - w.k(1);
                let front = w.comb(&[
                    (w.k(1), w.one()),
                    (um1.clone(), w.e(i)?),
                    (um1.clone(), w.e_arc(i, i + 2)?),
                    (um1.clone() * um1, w.prod(&[w.e(i)?, w.e(i + 1)?])?),
                ])?;
                Ok((w.prod(&[w.t(i)?, w.t(i + 1)?, st.clone()])?, w.prod(&[front, st])?))
            },
        },
        Relation {
            family: SteinbergAbsorb,
            id: "t2t1-steinberg",
            statement: "T_{i+1}T_iT_{i,i+1} = [1+(u-1)E_{i+1}+(u-1)E_{i,i+2}+(u-1)^2E_iE_{i+1}]T_{i,i+1}",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let i = x[0];
                let st = w.steinberg(i, i + 1)?;
                let um1 = w.u() - w.k(1);
                let front = w.comb(&[
                    (w.k(1), w.one()),
                    (um1.clone(), w.e(i + 1)?),
                    (um1.clone(), w.e_arc(i, i + 2)?),
                    (um1.clone() * um1, w.prod(&[w.e(i)?, w.e(i + 1)?])?),
                ])?;
                Ok((w.prod(&[w.t(i + 1)?, w.t(i)?, st.clone()])?, w.prod(&[front, st])?))
            },
        },
        Relation {
            family: SteinbergAbsorb,
            id: "t1t2t1-steinberg",
            statement: "T_iT_{i+1}T_iT_{i,i+1} = [1+(u-1)(E_i+E_{i+1}+E_{i,i+2})+(u-1)^2(u+2)E_iE_{i+1}]T_{i,i+1}",
            instances: lower_of_adjacent,
            sides: |w, x| {
                let i = x[0];
                let st = w.steinberg(i, i + 1)?;
                let um1 = w.u() - w.k(1);
                let front = w.comb(&[
                    (w.k(1), w.one()),
                    (um1.clone(), w.e(i)?),
                    (um1.clone(), w.e(i + 1)?),
                    (um1.clone(), w.e_arc(i, i + 2)?),
                    (um1.clone() * um1 * (w.u() + w.k(2)), w.prod(&[w.e(i)?, w.e(i + 1)?])?),
                ])?;
                Ok((w.prod(&[w.t(i)?, w.t(i + 1)?, w.t(i)?, st.clone()])?, w.prod(&[front, st])?))
            },
        },
        // ---- the quotient relation ----
        Relation {
            family: Quotient,
            id: "eet-steinberg",
            statement: "E_iE_jT_{ij} = 0, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let lhs = w.prod(&[w.e(x[0])?, w.e(x[1])?, w.steinberg(x[0], x[1])?])?;
                Ok((lhs, w.comb(&[])?))
            },
        },
        Relation {
            family: Quotient,
            id: "steinberg-ee",
            statement: "T_{ij}E_iE_j = 0, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let lhs = w.prod(&[w.steinberg(x[0], x[1])?, w.e(x[0])?, w.e(x[1])?])?;
                Ok((lhs, w.comb(&[])?))
            },
        },
        // ---- presentation by E_i, F_i ----
        Relation {
            family: FPresentation,
            id: "f-quadratic",
            statement: "F_i^2 = (1+δ)F_i - δE_iF_i",
            instances: singles,
            sides: |w, x| {
                let i = x[0];
                let d = w.delta()?;
                let rhs = w.comb(&[(w.k(1) + d.clone(), w.f(i)?), (-d, w.prod(&[w.e(i)?, w.f(i)?])?)])?;
                Ok((w.prod(&[w.f(i)?, w.f(i)?])?, rhs))
            },
        },
        Relation {
            family: FPresentation,
            id: "f-commute-far",
            statement: "F_iF_j = F_jF_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.f(x[0])?, w.f(x[1])?])?, w.prod(&[w.f(x[1])?, w.f(x[0])?])?)),
        },
        Relation {
            family: FPresentation,
            id: "fe-commute-far",
            statement: "F_iE_j = E_jF_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.f(x[0])?, w.e(x[1])?])?, w.prod(&[w.e(x[1])?, w.f(x[0])?])?)),
        },
        Relation {
            family: FPresentation,
            id: "ef-commute",
            statement: "E_iF_i = F_iE_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.e(x[0])?, w.f(x[0])?])?, w.prod(&[w.f(x[0])?, w.e(x[0])?])?)),
        },
        Relation {
            family: FPresentation,
            id: "eef-left",
            statement: "E_iE_jF_i = F_iE_iE_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, fi) = (w.e(x[0])?, w.e(x[1])?, w.f(x[0])?);
                Ok((w.prod(&[ei.clone(), ej.clone(), fi.clone()])?, w.prod(&[fi, ei, ej])?))
            },
        },
        Relation {
            family: FPresentation,
            id: "eef-middle",
            statement: "F_iE_iE_j = E_jF_iE_j + (E_iE_j - E_j)/(u+1), |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, fi) = (w.e(x[0])?, w.e(x[1])?, w.f(x[0])?);
                let eiej = w.prod(&[ei.clone(), ej.clone()])?;
                let rhs = w.comb(&[
                    (w.k(1), w.prod(&[ej.clone(), fi.clone(), ej.clone()])?),
                    (w.inv_u1()?, w.sub(&eiej, &ej)?),
                ])?;
                Ok((w.prod(&[fi, ei, ej])?, rhs))
            },
        },
        Relation {
            family: FPresentation,
            id: "eff",
            statement: "E_iF_jF_i = F_jF_iE_j + [(E_i-E_j)F_j + F_i(E_i-E_j)]/(u+1) - (E_i-E_j)/(u+1)^2, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, fi, fj) = (w.e(x[0])?, w.e(x[1])?, w.f(x[0])?, w.f(x[1])?);
                let diff = w.sub(&ei, &ej)?;
                let c = w.inv_u1()?;
                let rhs = w.comb(&[
                    (w.k(1), w.prod(&[fj.clone(), fi.clone(), ej])?),
                    (c.clone(), w.prod(&[diff.clone(), fj.clone()])?),
                    (c.clone(), w.prod(&[fi.clone(), diff.clone()])?),
                    (-(c.clone() * c), diff),
                ])?;
                Ok((w.prod(&[ei, fj, fi])?, rhs))
            },
        },
        Relation {
            family: FPresentation,
            id: "fff-cubic",
            statement: "F_iF_jF_i = (F_i - (1-u)E_iF_i)/(u+1)^2, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, fi, fj) = (w.e(x[0])?, w.f(x[0])?, w.f(x[1])?);
                let c = w.inv_u1()?;
                let c2 = c.clone() * c;
                let rhs = w.comb(&[
                    (c2.clone(), fi.clone()),
                    (-(c2 * (w.k(1) - w.u())), w.prod(&[ei, fi.clone()])?),
                ])?;
                Ok((w.prod(&[fi.clone(), fj, fi])?, rhs))
            },
        },
        // ---- presentation by E_i, L_i ----
        Relation {
            family: LPresentation,
            id: "l-idempotent",
            statement: "L_i^2 = L_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.l(x[0])?, w.l(x[0])?])?, w.l(x[0])?)),
        },
        Relation {
            family: LPresentation,
            id: "l-commute-far",
            statement: "L_iL_j = L_jL_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.l(x[0])?, w.l(x[1])?])?, w.prod(&[w.l(x[1])?, w.l(x[0])?])?)),
        },
        Relation {
            family: LPresentation,
            id: "le-commute-far",
            statement: "L_iE_j = E_jL_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.l(x[0])?, w.e(x[1])?])?, w.prod(&[w.e(x[1])?, w.l(x[0])?])?)),
        },
        Relation {
            family: LPresentation,
            id: "le-commute",
            statement: "L_iE_i = E_iL_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.l(x[0])?, w.e(x[0])?])?, w.prod(&[w.e(x[0])?, w.l(x[0])?])?)),
        },
        Relation {
            family: LPresentation,
            id: "eel-left",
            statement: "E_iE_jL_i = L_iE_iE_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, li) = (w.e(x[0])?, w.e(x[1])?, w.l(x[0])?);
                Ok((w.prod(&[ei.clone(), ej.clone(), li.clone()])?, w.prod(&[li, ei, ej])?))
            },
        },
        Relation {
            family: LPresentation,
            id: "eel-middle",
            statement: "L_iE_iE_j = E_jL_iE_j + (E_iE_j - E_j)/2, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, li) = (w.e(x[0])?, w.e(x[1])?, w.l(x[0])?);
                let eiej = w.prod(&[ei.clone(), ej.clone()])?;
                let rhs = w.comb(&[
                    (w.k(1), w.prod(&[ej.clone(), li.clone(), ej.clone()])?),
                    (w.k(2).checked_inv()?, w.sub(&eiej, &ej)?),
                ])?;
                Ok((w.prod(&[li, ei, ej])?, rhs))
            },
        },
        Relation {
            family: LPresentation,
            id: "lle",
            statement: "4L_iL_jE_i + 2E_j(L_j+L_i) + E_i = 4E_jL_iL_j + 2(L_i+L_j)E_i + E_j, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, li, lj) = (w.e(x[0])?, w.e(x[1])?, w.l(x[0])?, w.l(x[1])?);
                let lsum = w.sum(&[li.clone(), lj.clone()])?;
                let lhs = w.comb(&[
                    (w.k(4), w.prod(&[li.clone(), lj.clone(), ei.clone()])?),
                    (w.k(2), w.prod(&[ej.clone(), lsum.clone()])?),
                    (w.k(1), ei.clone()),
                ])?;
                let rhs = w.comb(&[
                    (w.k(4), w.prod(&[ej.clone(), li, lj])?),
                    (w.k(2), w.prod(&[lsum, ei])?),
                    (w.k(1), ej),
                ])?;
                Ok((lhs, rhs))
            },
        },
        Relation {
            family: LPresentation,
            id: "lll-cubic",
            statement: "8L_iL_jL_i + 4(u-1)[L_iE_jL_jL_i + E_iL_iL_jL_i + L_iL_jE_iL_i] + (u-1)^2(u+5)E_iE_jL_iL_jL_i \
                        = 2L_i + 3(u-1)E_iL_i + (u-1)^2E_iE_jL_i, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (ei, ej, li, lj) = (w.e(x[0])?, w.e(x[1])?, w.l(x[0])?, w.l(x[1])?);
                let um1 = w.u() - w.k(1);
                let lji = w.prod(&[lj.clone(), li.clone()])?;
                let liji = w.prod(&[li.clone(), lji.clone()])?;
                let bracket = w.sum(&[
                    w.prod(&[li.clone(), ej.clone(), lji.clone()])?,
                    w.prod(&[ei.clone(), liji.clone()])?,
                    w.prod(&[li.clone(), lj.clone(), ei.clone(), li.clone()])?,
                ])?;
                let eiej = w.prod(&[ei.clone(), ej.clone()])?;
                let lhs = w.comb(&[
                    (w.k(8), liji.clone()),
                    (w.k(4) * um1.clone(), bracket),
                    (um1.clone() * um1.clone() * (w.u() + w.k(5)), w.prod(&[eiej.clone(), liji])?),
                ])?;
                let rhs = w.comb(&[
                    (w.k(2), li.clone()),
                    (w.k(3) * um1.clone(), w.prod(&[ei, li.clone()])?),
                    (um1.clone() * um1, w.prod(&[eiej, li])?),
                ])?;
                Ok((lhs, rhs))
            },
        },
        // ---- Temperley-Lieb idempotents (meaningful when E_i = 1) ----
        Relation {
            family: TemperleyLieb,
            id: "tl-f-idempotent",
            statement: "f_i^2 = f_i",
            instances: singles,
            sides: |w, x| Ok((w.prod(&[w.f(x[0])?, w.f(x[0])?])?, w.f(x[0])?)),
        },
        Relation {
            family: TemperleyLieb,
            id: "tl-f-commute-far",
            statement: "f_if_j = f_jf_i, |i-j|>1",
            instances: far,
            sides: |w, x| Ok((w.prod(&[w.f(x[0])?, w.f(x[1])?])?, w.prod(&[w.f(x[1])?, w.f(x[0])?])?)),
        },
        Relation {
            family: TemperleyLieb,
            id: "tl-fff",
            statement: "f_if_jf_i = u/(1+u)^2 f_i, |i-j|=1",
            instances: adjacent,
            sides: |w, x| {
                let (fi, fj) = (w.f(x[0])?, w.f(x[1])?);
                let c = w.inv_u1()?;
                Ok((w.prod(&[fi.clone(), fj, fi.clone()])?, w.scale(&(w.u() * c.clone() * c), &fi)))
            },
        },
        Relation {
            family: TemperleyLieb,
            id: "tl-steinberg",
            statement: "h_{ij} = 0, |i-j|=1",
            instances: adjacent,
            sides: |w, x| Ok((w.steinberg(x[0], x[1])?, w.comb(&[])?)),
        },
    ]
}

/// Outcome of one identity instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationCheck {
    pub family: Family,
    pub id: String,
    pub indices: Vec<usize>,
    pub statement: String,
    pub holds: bool,
    /// Set when building either side failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationReport {
    pub n: usize,
    pub model: String,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(move |c| c.family == family)
    }

    pub fn get(&self, id: &str, indices: &[usize]) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.id == id && c.indices == indices)
    }
}

/// Checks every instance of the selected families in `model`.
pub fn check_families<M: GeneratorModel>(model: &M, model_name: &str, families: &[Family]) -> RelationReport {
    let words = Words::new(model);
    let n = model.n();
    let jobs: Vec<(Relation<M>, Vec<usize>)> = catalog::<M>()
        .into_iter()
        .filter(|r| families.contains(&r.family))
        .flat_map(|r| {
            (r.instances)(n).into_iter().map(move |x| {
                (
                    Relation {
                        family: r.family,
                        id: r.id,
                        statement: r.statement,
                        instances: r.instances,
                        sides: r.sides,
                    },
                    x,
                )
            })
        })
        .collect();
    let checks = jobs
        .par_iter()
        .map(|(r, x)| {
            let outcome = (r.sides)(&words, x).and_then(|(a, b)| model.equal(&a, &b));
            RelationCheck {
                family: r.family,
                id: r.id.to_string(),
                indices: x.clone(),
                statement: r.statement.to_string(),
                holds: matches!(outcome, Ok(true)),
                error: outcome.err().map(|e| e.to_string()),
            }
        })
        .collect();
    RelationReport {
        n,
        model: model_name.to_string(),
        checks,
    }
}

/// Defining relations and every derived family in the basis engine.
pub fn verify_relations<F: Field>(engine: &Engine<F>) -> RelationReport {
    check_families(
        engine,
        "engine",
        &[
            Family::Defining,
            Family::Gamma,
            Family::Idempotent,
            Family::Exchange,
            Family::SteinbergAbsorb,
        ],
    )
}
