//! Incremental sparse row echelon form over a field.
//!
//! Rows are kept with a unit leading coefficient. Reduction eliminates pivot
//! columns in increasing order; since a row only has entries to the right of
//! its pivot, the result has zeros at every pivot column and is therefore the
//! unique coset representative, without back-substitution on stored rows.
//!
//! Each row can carry a payload (a right-hand side) that is combined with the
//! same coefficients, which is how augmented systems are solved.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::scalar::{Field, Poly2};

/// Sorted `(column, value)` pairs with no zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Right-hand side data carried along row operations.
pub trait Payload<F>: Clone + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// self += c · other
    fn add_scaled(&mut self, other: &Self, c: &F);
    fn scaled(&self, c: &F) -> Self;
}

impl<F> Payload<F> for () {
    fn zero() {}
    fn is_zero(&self) -> bool {
        true
    }
    fn add_scaled(&mut self, _: &(), _: &F) {}
    fn scaled(&self, _: &F) {}
}

impl<F: Field> Payload<F> for Poly2<F> {
    fn zero() -> Self {
        <Poly2<F> as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, c: &F) {
        Poly2::add_scaled(self, c, other);
    }
    fn scaled(&self, c: &F) -> Self {
        self.scale(c)
    }
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn sparse_from<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (k, c) in entries {
        let slot = acc.entry(k).or_insert_with(F::zero);
        *slot = slot.clone() + c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[derive(Clone, Debug)]
struct Row<F, P> {
    entries: SparseVec<F>,
    payload: P,
}

/// Outcome of inserting a vector.
#[derive(Clone, Debug, PartialEq)]
pub enum Insert<P> {
    /// The vector was independent; its pivot column.
    Pivot(usize),
    /// The vector reduced to zero; the payload residue (zero when consistent).
    Dependent(P),
}

#[derive(Clone, Debug)]
pub struct Echelon<F, P = ()> {
    width: usize,
    rows: Vec<Row<F, P>>,
    pivots: HashMap<usize, usize>,
}

impl<F: Field, P: Payload<F>> Echelon<F, P> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    /// Stored rows in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.iter().map(|r| &r.entries)
    }

    /// Reduces `v` with payload `p` against the stored rows.
    pub fn reduce_with(&self, v: &[(usize, F)], p: P) -> (SparseVec<F>, P) {
        let mut acc: BTreeMap<usize, F> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut payload = p;
        let mut cursor = 0usize;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((col, c)) = next else {
                break;
            };
            let row = &self.rows[self.pivots[&col]];
            let neg = -c;
            for (k, x) in &row.entries {
                let slot = acc.entry(*k).or_insert_with(F::zero);
                *slot = slot.clone() + neg.clone() * x.clone();
                if slot.is_zero() {
                    acc.remove(k);
                }
            }
            payload.add_scaled(&row.payload, &neg);
            cursor = col + 1;
        }
        (acc.into_iter().collect(), payload)
    }

    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        self.reduce_with(v, P::zero()).0
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert_with(&mut self, v: &[(usize, F)], p: P) -> Insert<P> {
        let (r, payload) = self.reduce_with(v, p);
        let Some((col, lead)) = r.first().cloned() else {
            return Insert::Dependent(payload);
        };
        let inv = lead.checked_inv().expect("leading coefficient is nonzero");
        let entries = if inv.is_one() {
            r
        } else {
            r.into_iter().map(|(k, x)| (k, x * inv.clone())).collect()
        };
        self.pivots.insert(col, self.rows.len());
        self.rows.push(Row {
            entries,
            payload: payload.scaled(&inv),
        });
        Insert::Pivot(col)
    }

    /// True when the vector was independent of the stored rows.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        matches!(self.insert_with(v, P::zero()), Insert::Pivot(_))
    }

    /// For a full-rank square system, the unique solution x with x_col for every column.
    pub fn solve_unique(&self) -> Option<Vec<P>> {
        if self.rank() != self.width {
            return None;
        }
        let mut x: Vec<Option<P>> = vec![None; self.width];
        // each row only involves columns right of its pivot, so solve from the right
        for col in (0..self.width).rev() {
            let row = &self.rows[self.pivots[&col]];
            let mut value = row.payload.clone();
            for (k, c) in row.entries.iter().skip(1) {
                value.add_scaled(x[*k].as_ref().expect("solved right to left"), &-c.clone());
            }
            x[col] = Some(value);
        }
        x.into_iter().collect()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<F: Field>(width: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut ech: Echelon<F> = Echelon::new(width);
    for v in vectors {
        ech.insert(&v);
    }
    ech.rank()
}
