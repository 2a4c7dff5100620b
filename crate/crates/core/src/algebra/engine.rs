//! Normal-form multiplication in E_n(u).
//!
//! Every product is reduced to the basis E_I T_w by right multiplication with
//! generators. Right multiplication by E_i joins I with w(p_i), because
//! T_w E_i T_w^{-1} = E_{w p_i}. Right multiplication by T_i either lengthens
//! w or, when w·s_i = v is shorter, applies the quadratic relation
//!
//! ```text
//! E_I T_w T_i = E_I T_v + (u-1) E_{I * v p_i} T_v + (u-1) E_{I * v p_i} T_w.
//! ```

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::Permutation;
use crate::scalar::{Field, RationalFunction};

use super::basis::{BasisElement, BasisKey, BasisTables};
use super::element::AlgebraElement;

type Terms<F> = BTreeMap<BasisKey, F>;

fn add_into<F: Field>(acc: &mut Terms<F>, key: BasisKey, c: F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(v) => {
            *v = v.clone() + c;
            if v.is_zero() {
                acc.remove(&key);
            }
        }
        None => {
            acc.insert(key, c);
        }
    }
}

type ProductCache<F> = Arc<Vec<OnceLock<Vec<(BasisKey, F)>>>>;

/// Multiplication engine for E_n(u) with coefficients in `F`, where `sqrt_u`
/// is the image of √u in `F`.
#[derive(Clone)]
pub struct Engine<F> {
    tables: Arc<BasisTables>,
    sqrt_u: F,
    u: F,
    u_minus_one: F,
    // T_w T_v expanded in the basis, indexed by w * n! + v.
    products: ProductCache<F>,
}

impl<F: Field> Engine<F> {
    /// Fails with [`Error::Pole`] when u = 0 or u = -1, where the named
    /// elements T_i^{-1}, F_i and L_i are undefined.
    pub fn new(n: usize, sqrt_u: F) -> Result<Self> {
        Self::with_tables(Arc::new(BasisTables::new(n)?), sqrt_u)
    }

    pub fn with_tables(tables: Arc<BasisTables>, sqrt_u: F) -> Result<Self> {
        let u = sqrt_u.clone() * sqrt_u.clone();
        if u.is_zero() || (u.clone() + F::one()).is_zero() {
            return Err(Error::Pole);
        }
        let m = tables.perm_count();
        let products = Arc::new((0..m * m).map(|_| OnceLock::new()).collect());
        Ok(Engine {
            u_minus_one: u.clone() - F::one(),
            u,
            sqrt_u,
            tables,
            products,
        })
    }

    pub fn n(&self) -> usize {
        self.tables.n()
    }

    pub fn tables(&self) -> &Arc<BasisTables> {
        &self.tables
    }

    pub fn dim(&self) -> usize {
        self.tables.dim()
    }

    pub fn sqrt_u(&self) -> &F {
        &self.sqrt_u
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    /// δ = (1-u)/(1+u)
    pub fn delta(&self) -> F {
        (F::one() - self.u.clone())
            .checked_div(&(F::one() + self.u.clone()))
            .expect("u != -1 checked at construction")
    }

    /// α = (1+u)/2
    pub fn alpha(&self) -> F {
        (F::one() + self.u.clone())
            .checked_div(&F::from_i64(2))
            .expect("characteristic is not 2")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    fn check_elem(&self, a: &AlgebraElement<F>) -> Result<()> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: a.n(),
            });
        }
        Ok(())
    }

    fn element(&self, terms: Terms<F>) -> AlgebraElement<F> {
        AlgebraElement::from_terms(self.n(), terms)
    }

    // ---- generator actions on single basis elements ----

    fn push_right_t(&self, acc: &mut Terms<F>, key: BasisKey, c: F, i: usize) {
        let t = &self.tables;
        let (v, longer) = t.right_s(key.perm, i);
        if longer {
            add_into(acc, BasisKey { partition: key.partition, perm: v }, c);
            return;
        }
        let joined = t.join(key.partition, t.act(v, t.generator(i)));
        let cq = c.clone() * self.u_minus_one.clone();
        add_into(acc, BasisKey { partition: key.partition, perm: v }, c);
        add_into(acc, BasisKey { partition: joined, perm: v }, cq.clone());
        add_into(acc, BasisKey { partition: joined, perm: key.perm }, cq);
    }

    fn right_e_key(&self, key: BasisKey, i: usize) -> BasisKey {
        let t = &self.tables;
        BasisKey {
            partition: t.join(key.partition, t.act(key.perm, t.generator(i))),
            perm: key.perm,
        }
    }

    /// (E_I T_w) · T_i
    pub fn mul_basis_by_t(&self, key: BasisKey, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        let mut acc = Terms::new();
        self.push_right_t(&mut acc, key, F::one(), i);
        Ok(self.element(acc))
    }

    /// (E_I T_w) · E_i
    pub fn mul_basis_by_e(&self, key: BasisKey, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        Ok(AlgebraElement::basis(self.n(), self.right_e_key(key, i), F::one()))
    }

    pub fn right_mul_t(&self, a: &AlgebraElement<F>, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        self.check_elem(a)?;
        let mut acc = Terms::new();
        for (k, c) in a.terms() {
            self.push_right_t(&mut acc, *k, c.clone(), i);
        }
        Ok(self.element(acc))
    }

    pub fn right_mul_e(&self, a: &AlgebraElement<F>, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        self.check_elem(a)?;
        let mut acc = Terms::new();
        for (k, c) in a.terms() {
            add_into(&mut acc, self.right_e_key(*k, i), c.clone());
        }
        Ok(self.element(acc))
    }

    /// T_i · a, using T_i E_I = E_{s_i I} T_i and the quadratic relation on the left.
    pub fn left_mul_t(&self, i: usize, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        self.check_elem(a)?;
        let t = &self.tables;
        let s_i = t.right_s(t.identity_perm(), i).0;
        let mut acc = Terms::new();
        for (key, c) in a.terms() {
            let moved = t.act(s_i, key.partition);
            let (x, longer) = t.left_s(key.perm, i);
            if longer {
                add_into(&mut acc, BasisKey { partition: moved, perm: x }, c.clone());
                continue;
            }
            let joined = t.join(moved, t.generator(i));
            let cq = c.clone() * self.u_minus_one.clone();
            add_into(&mut acc, BasisKey { partition: moved, perm: x }, c.clone());
            add_into(&mut acc, BasisKey { partition: joined, perm: x }, cq.clone());
            add_into(&mut acc, BasisKey { partition: joined, perm: key.perm }, cq);
        }
        Ok(self.element(acc))
    }

    /// E_i · a
    pub fn left_mul_e(&self, i: usize, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        self.check_elem(a)?;
        let t = &self.tables;
        let mut acc = Terms::new();
        for (key, c) in a.terms() {
            let k = BasisKey {
                partition: t.join(t.generator(i), key.partition),
                perm: key.perm,
            };
            add_into(&mut acc, k, c.clone());
        }
        Ok(self.element(acc))
    }

    /// T_w T_v in the basis, cached.
    fn perm_product(&self, w: u32, v: u32) -> &[(BasisKey, F)] {
        let m = self.tables.perm_count();
        self.products[w as usize * m + v as usize].get_or_init(|| {
            let mut acc = Terms::new();
            acc.insert(
                BasisKey {
                    partition: self.tables.unit_partition(),
                    perm: w,
                },
                F::one(),
            );
            for &i in self.tables.word(v) {
                let mut next = Terms::new();
                for (k, c) in acc {
                    self.push_right_t(&mut next, k, c, i);
                }
                acc = next;
            }
            acc.into_iter().collect()
        })
    }

    /// (E_I T_w)(E_J T_v) = E_{I * wJ} T_w T_v, expanded.
    fn push_basis_product(&self, acc: &mut Terms<F>, a: BasisKey, b: BasisKey, c: F) {
        let t = &self.tables;
        let front = t.join(a.partition, t.act(a.perm, b.partition));
        for (k, coeff) in self.perm_product(a.perm, b.perm) {
            let key = BasisKey {
                partition: t.join(front, k.partition),
                perm: k.perm,
            };
            add_into(acc, key, c.clone() * coeff.clone());
        }
    }

    pub fn mul(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        let mut acc = Terms::new();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                self.push_basis_product(&mut acc, *ka, *kb, ca.clone() * cb.clone());
            }
        }
        Ok(self.element(acc))
    }

    /// Left-to-right product of a sequence of elements.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a AlgebraElement<F>>) -> Result<AlgebraElement<F>> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &AlgebraElement<F>, e: u32) -> Result<AlgebraElement<F>> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn scalar(&self, c: F) -> AlgebraElement<F> {
        AlgebraElement::basis(
            self.n(),
            BasisKey {
                partition: self.tables.unit_partition(),
                perm: self.tables.identity_perm(),
            },
            c,
        )
    }

    // ---- named elements ----

    pub fn one(&self) -> AlgebraElement<F> {
        self.scalar(F::one())
    }

    pub fn basis_element(&self, element: &BasisElement) -> Result<AlgebraElement<F>> {
        Ok(AlgebraElement::basis(self.n(), self.tables.key(element)?, F::one()))
    }

    pub fn key_element(&self, key: BasisKey) -> AlgebraElement<F> {
        AlgebraElement::basis(self.n(), key, F::one())
    }

    pub fn t(&self, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        let perm = self.tables.right_s(self.tables.identity_perm(), i).0;
        Ok(self.key_element(BasisKey {
            partition: self.tables.unit_partition(),
            perm,
        }))
    }

    pub fn e(&self, i: usize) -> Result<AlgebraElement<F>> {
        self.check_index(i)?;
        Ok(self.key_element(BasisKey {
            partition: self.tables.generator(i),
            perm: self.tables.identity_perm(),
        }))
    }

    /// T_i^{-1} = T_i + (u^{-1} - 1) E_i (1 + T_i)
    pub fn t_inv(&self, i: usize) -> Result<AlgebraElement<F>> {
        let t = self.t(i)?;
        let e = self.e(i)?;
        let c = self.u.checked_inv()? - F::one();
        let et = self.right_mul_t(&e, i)?;
        Ok(t + (e + et).scale(&c))
    }

    /// T_w = T_{i_1}···T_{i_k} for the canonical reduced word of w.
    pub fn t_perm(&self, w: &Permutation) -> Result<AlgebraElement<F>> {
        Ok(self.key_element(BasisKey {
            partition: self.tables.unit_partition(),
            perm: self.tables.perm_idx(w)?,
        }))
    }

    /// Product of generators T_{i_1}···T_{i_k} for an arbitrary word.
    pub fn t_word(&self, word: &[usize]) -> Result<AlgebraElement<F>> {
        let mut acc = self.one();
        for &i in word {
            acc = self.right_mul_t(&acc, i)?;
        }
        Ok(acc)
    }

    /// E_I as the single basis term (I, identity).
    pub fn e_partition(&self, p: &SetPartition) -> Result<AlgebraElement<F>> {
        Ok(self.key_element(BasisKey {
            partition: self.tables.partition_idx(p)?,
            perm: self.tables.identity_perm(),
        }))
    }

    fn check_arc(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i >= j || j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, n: self.n() });
        }
        Ok(())
    }

    /// E_{ij} as the basis term of the partition with the single block {i, j}.
    pub fn e_arc(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        self.check_arc(i, j)?;
        self.e_partition(&SetPartition::from_blocks(self.n(), &[vec![i, j]])?)
    }

    /// E_{ij} = T_i···T_{j-2} E_{j-1} T_{j-2}^{-1}···T_i^{-1}, multiplied out.
    pub fn e_arc_by_conjugation(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        self.check_arc(i, j)?;
        let mut acc = self.e(j - 1)?;
        for k in (i..j - 1).rev() {
            acc = self.mul(&self.mul(&self.t(k)?, &acc)?, &self.t_inv(k)?)?;
        }
        Ok(acc)
    }

    /// E_J = E_{i_1 i_2} E_{i_2 i_3}··· over consecutive elements of the block.
    pub fn e_block_chain(&self, block: &[usize]) -> Result<AlgebraElement<F>> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        let mut acc = self.one();
        for w in sorted.windows(2) {
            acc = self.mul(&acc, &self.e_arc_by_conjugation(w[0], w[1])?)?;
        }
        Ok(acc)
    }

    /// E_J = ∏_{j ≠ i_0} E_{i_0 j} with i_0 = min J.
    pub fn e_block_star(&self, block: &[usize]) -> Result<AlgebraElement<F>> {
        let Some(&root) = block.iter().min() else {
            return Ok(self.one());
        };
        let mut acc = self.one();
        for &j in block.iter().filter(|&&j| j != root) {
            acc = self.mul(&acc, &self.e_arc_by_conjugation(root, j)?)?;
        }
        Ok(acc)
    }

    /// E_I = ∏_k E_{I_k}, built from the conjugation formula.
    pub fn e_partition_by_products(&self, p: &SetPartition) -> Result<AlgebraElement<F>> {
        let mut acc = self.one();
        for block in p.blocks() {
            acc = self.mul(&acc, &self.e_block_chain(&block)?)?;
        }
        Ok(acc)
    }

    fn check_adjacent(&self, i: usize, j: usize) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i.abs_diff(j) != 1 {
            return Err(Error::NotAdjacent { i, j });
        }
        Ok(())
    }

    /// T_{ij} = 1 + T_i + T_j + T_iT_j + T_jT_i + T_iT_jT_i for |i - j| = 1.
    pub fn steinberg(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        self.check_adjacent(i, j)?;
        let words: [&[usize]; 6] = [&[], &[i], &[j], &[i, j], &[j, i], &[i, j, i]];
        let mut acc = AlgebraElement::zero(self.n());
        for w in words {
            acc = acc + self.t_word(w)?;
        }
        Ok(acc)
    }

    /// Γ = T_1 T_2 ··· T_{n-1}
    pub fn gamma(&self) -> Result<AlgebraElement<F>> {
        self.t_word(&(1..self.n()).collect::<Vec<_>>())
    }

    /// Γ^{-1} = T_{n-1}^{-1} ··· T_1^{-1}
    pub fn gamma_inv(&self) -> Result<AlgebraElement<F>> {
        let mut acc = self.one();
        for i in (1..self.n()).rev() {
            acc = self.mul(&acc, &self.t_inv(i)?)?;
        }
        Ok(acc)
    }

    /// F_i = (1 + T_i)/(u + 1)
    pub fn f(&self, i: usize) -> Result<AlgebraElement<F>> {
        let c = (F::one() + self.u.clone()).checked_inv()?;
        Ok((self.one() + self.t(i)?).scale(&c))
    }

    /// L_i = ½(1 + T_i)(1 + δE_i)
    pub fn l(&self, i: usize) -> Result<AlgebraElement<F>> {
        let left = self.one() + self.t(i)?;
        let right = self.one() + self.e(i)?.scale(&self.delta());
        let half = F::from_i64(2).checked_inv()?;
        Ok(self.mul(&left, &right)?.scale(&half))
    }

    /// The ideal generator E_1 E_2 T_{12}.
    pub fn ideal_generator(&self) -> Result<AlgebraElement<F>> {
        self.edge_generator(1)
    }

    /// E_i E_{i+1} T_{i,i+1}.
    pub fn edge_generator(&self, i: usize) -> Result<AlgebraElement<F>> {
        let ee = self.mul(&self.e(i)?, &self.e(i + 1)?)?;
        self.mul(&ee, &self.steinberg(i, i + 1)?)
    }

    /// Embeds E_{n-1} into E_n: (I, w) ↦ (I ∪ {{n}}, w fixing n).
    pub fn embed_from(&self, smaller: &Engine<F>, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        if smaller.n() + 1 != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n() - 1,
                found: smaller.n(),
            });
        }
        let mut out = AlgebraElement::zero(self.n());
        for (key, c) in a.terms() {
            let p = smaller.tables.partition(key.partition);
            let mut labels: Vec<usize> = p.rgs().iter().map(|&l| l as usize).collect();
            labels.push(self.n() + 1);
            let mut images = smaller.tables.perm(key.perm).images().to_vec();
            images.push(self.n() as u8);
            let big = BasisKey {
                partition: self.tables.partition_idx(&SetPartition::from_labels(&labels))?,
                perm: self.tables.perm_idx(&Permutation::from_images(images)?)?,
            };
            out.add_term(big, c.clone());
        }
        Ok(out)
    }

    // ---- text ----

    /// Renders "(c1)·E{...}T[...] + ..." in basis order; zero renders as "0".
    pub fn render(&self, a: &AlgebraElement<F>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        a.terms()
            .map(|(k, c)| format!("({c})·{}", self.tables.element(*k)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of [`Engine::render`].
    pub fn parse(&self, text: &str) -> Result<AlgebraElement<F>>
    where
        F: std::str::FromStr<Err = Error>,
    {
        let text = text.trim();
        let mut out = AlgebraElement::zero(self.n());
        if text == "0" {
            return Ok(out);
        }
        let bad = |why: &str| Error::Parse(format!("{why} in element {text:?}"));
        let mut rest = text;
        loop {
            rest = rest.trim_start();
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let mut depth = 1usize;
            let close = body
                .char_indices()
                .find(|&(_, ch)| {
                    match ch {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    depth == 0
                })
                .map(|(k, _)| k)
                .ok_or_else(|| bad("unbalanced parentheses"))?;
            let coeff: F = body[..close].parse()?;
            let after = body[close + 1..]
                .strip_prefix("·E")
                .ok_or_else(|| bad("expected '·E'"))?;
            let t_pos = after.find("}T[").ok_or_else(|| bad("expected 'T['"))? + 1;
            let partition: SetPartition = after[..t_pos].parse()?;
            let perm_end = after[t_pos..].find(']').ok_or_else(|| bad("expected ']'"))? + t_pos;
            let perm: Permutation = after[t_pos + 1..=perm_end].parse()?;
            out.add_term(self.tables.key(&BasisElement { partition, perm })?, coeff);
            rest = after[perm_end + 1..].trim_start();
            if rest.is_empty() {
                return Ok(out);
            }
            rest = rest.strip_prefix('+').ok_or_else(|| bad("expected '+'"))?;
        }
    }
}

impl Engine<RationalFunction> {
    /// The generic engine over Q(√u).
    pub fn symbolic(n: usize) -> Result<Self> {
        Self::new(n, RationalFunction::s())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RationalFunction as Rf;
    use num_traits::One;

    fn eng(n: usize) -> Engine<Rf> {
        Engine::symbolic(n).unwrap()
    }

    fn key(e: &Engine<Rf>, p: &str, w: &str) -> BasisKey {
        e.tables()
            .key(&BasisElement {
                partition: p.parse().unwrap(),
                perm: w.parse().unwrap(),
            })
            .unwrap()
    }

    fn um1() -> Rf {
        Rf::u() - Rf::one()
    }

    #[test]
    fn right_t_lengthening() {
        let e = eng(3);
        let r = e.mul_basis_by_t(key(&e, "{{1},{2},{3}}", "[1,2,3]"), 1).unwrap();
        assert_eq!(r, AlgebraElement::basis(3, key(&e, "{{1},{2},{3}}", "[2,1,3]"), Rf::one()));
    }

    #[test]
    fn right_t_quadratic() {
        let e = eng(3);
        let r = e.mul_basis_by_t(key(&e, "{{1},{2},{3}}", "[2,1,3]"), 1).unwrap();
        let expected = AlgebraElement::from_terms(
            3,
            [
                (key(&e, "{{1},{2},{3}}", "[1,2,3]"), Rf::one()),
                (key(&e, "{{1,2},{3}}", "[1,2,3]"), um1()),
                (key(&e, "{{1,2},{3}}", "[2,1,3]"), um1()),
            ],
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn right_t_on_full_block() {
        let e = eng(3);
        let r = e.mul_basis_by_t(key(&e, "{{1,2,3}}", "[1,2,3]"), 1).unwrap();
        assert_eq!(r, AlgebraElement::basis(3, key(&e, "{{1,2,3}}", "[2,1,3]"), Rf::one()));
    }

    #[test]
    fn right_e_examples() {
        let e = eng(3);
        let r = e.mul_basis_by_e(key(&e, "{{1},{2},{3}}", "[2,1,3]"), 1).unwrap();
        assert_eq!(r, AlgebraElement::basis(3, key(&e, "{{1,2},{3}}", "[2,1,3]"), Rf::one()));
        // w = s2 s1 in one-line notation is [3,1,2]
        let w = Permutation::from_word(&[2, 1], 3).unwrap().to_string();
        let r = e.mul_basis_by_e(key(&e, "{{1},{2},{3}}", &w), 2).unwrap();
        assert_eq!(r, AlgebraElement::basis(3, key(&e, "{{1,2},{3}}", &w), Rf::one()));
        let r = e.mul_basis_by_e(key(&e, "{{1,2},{3}}", "[1,2,3]"), 1).unwrap();
        assert_eq!(r, AlgebraElement::basis(3, key(&e, "{{1,2},{3}}", "[1,2,3]"), Rf::one()));
    }

    #[test]
    fn index_errors() {
        let e = eng(3);
        assert_eq!(e.t(3), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
        assert_eq!(e.e(0), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        assert!(e.mul_basis_by_t(key(&e, "{{1},{2},{3}}", "[1,2,3]"), 5).is_err());
        assert_eq!(e.steinberg(1, 1), Err(Error::NotAdjacent { i: 1, j: 1 }));
        assert!(e.e_arc(2, 2).is_err());
        let other = eng(4);
        assert_eq!(
            e.mul(&e.one(), &other.one()),
            Err(Error::SizeMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn commuting_ties_and_braid() {
        let e = eng(3);
        let (e1, e2) = (e.e(1).unwrap(), e.e(2).unwrap());
        assert_eq!(e.mul(&e1, &e2).unwrap(), e.mul(&e2, &e1).unwrap());
        assert_eq!(e.t_word(&[1, 2, 1]).unwrap(), e.t_word(&[2, 1, 2]).unwrap());
        let a = e.steinberg(1, 2).unwrap();
        assert_eq!(e.mul(&e.one(), &a).unwrap(), a);
        assert_eq!(e.mul(&a, &e.one()).unwrap(), a);
    }

    #[test]
    fn inverse_of_t() {
        let e = eng(3);
        for i in 1..3 {
            let (t, ti) = (e.t(i).unwrap(), e.t_inv(i).unwrap());
            assert_eq!(e.mul(&t, &ti).unwrap(), e.one());
            assert_eq!(e.mul(&ti, &t).unwrap(), e.one());
        }
        // at u = 1 the inverse coincides with T_i
        let at_one = Engine::new(3, num_rational::BigRational::from_integer(1.into())).unwrap();
        assert_eq!(at_one.t_inv(1).unwrap(), at_one.t(1).unwrap());
    }

    #[test]
    fn tie_elements() {
        let e = eng(3);
        assert_eq!(e.e_arc(1, 2).unwrap(), e.e(1).unwrap());
        assert_eq!(e.e_arc_by_conjugation(1, 3).unwrap(), e.e_arc(1, 3).unwrap());
        assert_eq!(e.e_partition(&SetPartition::unit(3)).unwrap(), e.one());
        let e4 = eng(4);
        for p in SetPartition::enumerate(4) {
            assert_eq!(e4.e_partition_by_products(&p).unwrap(), e4.e_partition(&p).unwrap(), "{p}");
            for block in p.blocks() {
                assert_eq!(e4.e_block_chain(&block).unwrap(), e4.e_block_star(&block).unwrap());
            }
        }
    }

    #[test]
    fn steinberg_support() {
        let e = eng(3);
        let st = e.steinberg(1, 2).unwrap();
        assert_eq!(st.len(), 6);
        for (k, c) in st.terms() {
            assert_eq!(k.partition, e.tables().unit_partition());
            assert_eq!(*c, Rf::one());
        }
        assert_eq!(st, e.steinberg(2, 1).unwrap());
    }

    #[test]
    fn left_multiplication_agrees_with_general_product() {
        let e = eng(3);
        for k in e.tables().keys().collect::<Vec<_>>() {
            let b = e.key_element(k);
            for i in 1..3 {
                assert_eq!(e.left_mul_t(i, &b).unwrap(), e.mul(&e.t(i).unwrap(), &b).unwrap());
                assert_eq!(e.left_mul_e(i, &b).unwrap(), e.mul(&e.e(i).unwrap(), &b).unwrap());
                assert_eq!(e.right_mul_t(&b, i).unwrap(), e.mul(&b, &e.t(i).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn render_and_parse() {
        let e = eng(3);
        let a = e.f(1).unwrap() + e.steinberg(1, 2).unwrap().scale(&Rf::s());
        let text = e.render(&a);
        assert_eq!(e.parse(&text).unwrap(), a);
        assert_eq!(e.render(&AlgebraElement::zero(3)), "0");
        assert_eq!(e.parse("0").unwrap(), AlgebraElement::zero(3));
        assert_eq!(e.render(&e.e(1).unwrap()), "(1)·E{{1,2},{3}}T[1,2,3]");
        assert!(e.parse("(1)·E{{1,2}}T[1,2,3]").is_err());
        assert!(e.parse("(1·E{{1,2},{3}}T[1,2,3]").is_err());
    }

    #[test]
    fn embedding() {
        let (e2, e3) = (eng(2), eng(3));
        let x = e2.mul(&e2.e(1).unwrap(), &e2.t(1).unwrap()).unwrap();
        let y = e3.mul(&e3.e(1).unwrap(), &e3.t(1).unwrap()).unwrap();
        assert_eq!(e3.embed_from(&e2, &x).unwrap(), y);
    }

    #[test]
    fn degenerate_sizes() {
        let e1 = eng(1);
        assert_eq!(e1.dim(), 1);
        assert_eq!(e1.gamma().unwrap(), e1.one());
        assert!(e1.t(1).is_err());
        let e2 = eng(2);
        assert_eq!(e2.dim(), 4);
    }

    #[test]
    fn pole_at_u_minus_one() {
        // s = i is not rational, but u = -1 needs s^2 = -1; over Fp pick a square root of -1.
        use crate::scalar::Fp;
        let minus_one = Fp::from_i64(-1);
        // 2^61 - 1 ≡ 3 mod 4, so -1 is not a square there; check u = 0 instead.
        assert!(minus_one != Fp::from_i64(1));
        assert_eq!(Engine::new(3, Fp::from_i64(0)).err(), Some(Error::Pole));
    }
}
