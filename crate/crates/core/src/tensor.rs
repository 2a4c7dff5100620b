//! Tensor-space representations of E_n on V^{⊗n}.
//!
//! V has basis v_i^r with a lower index i ≤ `lower` and an upper index
//! r ≤ `upper`. With lower = upper = n this is the representation 𝒥_n; with
//! two lower indices and a single upper index the tie operators are the
//! identity and T_i acts by the classical Jimbo matrix.
//!
//! A basis vector of V^{⊗n} is encoded as a base-d number, d = lower·upper,
//! whose most significant digit is the first tensor factor; digit value
//! (r-1)·lower + (i-1) stands for v_i^r.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, BasisKey, BasisTables, Engine};
use crate::error::{Error, Result};
use crate::linalg::{sparse_from, Echelon, SparseVec};
use crate::partition::SetPartition;
use crate::relations::{check_families, Family, GeneratorModel, RelationCheck, RelationReport};
use crate::scalar::Field;

/// The space V^{⊗n} with its basis encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    n: usize,
    lower: usize,
    upper: usize,
    d: usize,
    dim: usize,
}

impl TensorSpace {
    pub fn new(n: usize, lower: usize, upper: usize) -> Result<Self> {
        let d = lower * upper;
        let dim = (d as u64).checked_pow(n as u32).filter(|&x| x <= 1 << 24).ok_or(Error::Unsupported {
            n,
            reason: "tensor space too large".into(),
        })? as usize;
        if n == 0 || d == 0 {
            return Err(Error::Unsupported {
                n,
                reason: "empty tensor space".into(),
            });
        }
        Ok(TensorSpace { n, lower, upper, d, dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn site_dim(&self) -> usize {
        self.d
    }

    fn place(&self, k: usize) -> usize {
        self.d.pow((self.n - k) as u32)
    }

    /// Digit of tensor factor k (1-based).
    pub fn digit(&self, index: usize, k: usize) -> usize {
        index / self.place(k) % self.d
    }

    /// Index of v_{i_1}^{r_1} ⊗ ··· ⊗ v_{i_n}^{r_n}, from 1-based (i, r) pairs.
    pub fn encode(&self, factors: &[(usize, usize)]) -> Result<usize> {
        if factors.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: factors.len(),
            });
        }
        let mut idx = 0;
        for &(i, r) in factors {
            if i == 0 || i > self.lower || r == 0 || r > self.upper {
                return Err(Error::IndexOutOfRange { index: i.max(r), n: self.n });
            }
            idx = idx * self.d + (r - 1) * self.lower + (i - 1);
        }
        Ok(idx)
    }

    /// Inverse of [`TensorSpace::encode`].
    pub fn decode(&self, index: usize) -> Vec<(usize, usize)> {
        (1..=self.n)
            .map(|k| {
                let v = self.digit(index, k);
                (v % self.lower + 1, v / self.lower + 1)
            })
            .collect()
    }

    /// Text form "v1^1⊗v2^1⊗v1^2".
    pub fn basis_name(&self, index: usize) -> String {
        self.decode(index)
            .iter()
            .map(|(i, r)| format!("v{i}^{r}"))
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// True when the upper indices are constant on every block of `p`.
    pub fn tie_kept(&self, p: &SetPartition, index: usize) -> bool {
        let uppers: Vec<usize> = (1..=self.n).map(|k| self.digit(index, k) / self.lower).collect();
        p.blocks().iter().all(|b| b.iter().all(|&k| uppers[k - 1] == uppers[b[0] - 1]))
    }

    /// Representative of the class of basis vectors related to `index` by
    /// relabelings that every generator commutes with: upper indices are
    /// renamed in order of first appearance and, within each upper class,
    /// lower indices are replaced by their dense rank.
    pub fn canonical(&self, index: usize) -> usize {
        let f = self.decode(index);
        let mut upper_map: Vec<usize> = Vec::new();
        for &(_, r) in &f {
            if !upper_map.contains(&r) {
                upper_map.push(r);
            }
        }
        let mut out = Vec::with_capacity(self.n);
        for &(i, r) in &f {
            let mut lowers: Vec<usize> = f.iter().filter(|x| x.1 == r).map(|x| x.0).collect();
            lowers.sort_unstable();
            lowers.dedup();
            let rank = lowers.iter().position(|&x| x == i).unwrap() + 1;
            let new_r = upper_map.iter().position(|&x| x == r).unwrap() + 1;
            out.push((rank, new_r));
        }
        self.encode(&out).expect("canonical form stays in range")
    }

    /// All canonical representatives, ascending.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = (0..self.dim).filter(|&x| self.canonical(x) == x).collect();
        reps.sort_unstable();
        reps
    }
}

/// Exact sparse linear operator stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<F> {
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> Operator<F> {
    pub fn from_columns(cols: Vec<SparseVec<F>>) -> Self {
        Operator { cols }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize) -> SparseVec<F> + Sync + Send) -> Self {
        Operator {
            cols: (0..dim).into_par_iter().map(f).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |c| vec![(c, F::one())])
    }

    pub fn zero(dim: usize) -> Self {
        Operator { cols: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec<F> {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, x: &[(usize, F)]) -> SparseVec<F> {
        sparse_from(
            x.iter()
                .flat_map(|(k, c)| self.cols[*k].iter().map(move |(r, a)| (*r, a.clone() * c.clone()))),
        )
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::SizeMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// self ∘ other
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Operator {
            cols: other.cols.par_iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Operator {
            cols: self
                .cols
                .par_iter()
                .zip(&other.cols)
                .map(|(a, b)| sparse_from(a.iter().cloned().chain(b.iter().cloned())))
                .collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim());
        }
        Operator {
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(k, x)| (*k, x.clone() * c.clone())).collect())
                .collect(),
        }
    }

    /// Nonzero entries as (row, column, value), column-major.
    pub fn triplets(&self) -> Vec<(usize, usize, F)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x.clone())))
            .collect()
    }

    /// One "row col value" line per nonzero entry, 0-based indices.
    pub fn to_triplet_text(&self) -> String {
        let mut out = String::new();
        for (r, c, x) in self.triplets() {
            writeln!(out, "{r} {c} {x}").expect("writing to a string");
        }
        out
    }
}

/// Generator images on V^{⊗n}, precomputed as sparse operators.
pub struct JimboModel<F> {
    space: TensorSpace,
    sqrt_u: F,
    u: F,
    t_ops: Vec<Operator<F>>,
    e_ops: Vec<Operator<F>>,
}

type Local<F> = Vec<(usize, usize, F)>;

impl<F: Field> JimboModel<F> {
    /// 𝒥_n: dim V = n², lower and upper indices in 1..n.
    pub fn braids_and_ties(n: usize, sqrt_u: F) -> Result<Self> {
        Self::with_space(TensorSpace::new(n, n, n)?, sqrt_u)
    }

    /// 𝒥_n restricted to lower indices 1, 2: the invariant subspace on which
    /// the quotient relation holds.
    pub fn two_lower(n: usize, sqrt_u: F) -> Result<Self> {
        Self::with_space(TensorSpace::new(n, 2, n)?, sqrt_u)
    }

    /// The classical Jimbo representation on (K²)^{⊗n}; ties act as the identity.
    pub fn classical(n: usize, sqrt_u: F) -> Result<Self> {
        Self::with_space(TensorSpace::new(n, 2, 1)?, sqrt_u)
    }

    pub fn with_space(space: TensorSpace, sqrt_u: F) -> Result<Self> {
        let u = sqrt_u.clone() * sqrt_u.clone();
        if u.is_zero() || (u.clone() + F::one()).is_zero() {
            return Err(Error::Pole);
        }
        let mut model = JimboModel {
            space,
            sqrt_u,
            u,
            t_ops: Vec::new(),
            e_ops: Vec::new(),
        };
        let n = model.space.n;
        model.t_ops = (1..n).map(|i| model.local_operator(i, |a, b| model.t_gate(a, b))).collect();
        model.e_ops = (1..n).map(|i| model.local_operator(i, |a, b| model.e_gate(a, b))).collect();
        Ok(model)
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    fn split(&self, v: usize) -> (usize, usize) {
        (v % self.space.lower, v / self.space.lower)
    }

    /// 𝐓 on v_a ⊗ v_b.
    fn t_gate(&self, a: usize, b: usize) -> Local<F> {
        let ((i, r), (j, s)) = (self.split(a), self.split(b));
        if r != s {
            vec![(b, a, -F::one())]
        } else if i == j {
            vec![(a, b, -F::one())]
        } else if i < j {
            vec![(a, b, self.u.clone() - F::one()), (b, a, self.sqrt_u.clone())]
        } else {
            vec![(b, a, self.sqrt_u.clone())]
        }
    }

    /// 𝐄 on v_a ⊗ v_b.
    fn e_gate(&self, a: usize, b: usize) -> Local<F> {
        if self.split(a).1 == self.split(b).1 {
            vec![(a, b, F::one())]
        } else {
            Vec::new()
        }
    }

    /// The explicit Temperley-Lieb gate 𝐅, for same upper indices.
    fn f_gate(&self, a: usize, b: usize) -> Local<F> {
        let ((i, _), (j, _)) = (self.split(a), self.split(b));
        let c = (self.u.clone() + F::one()).checked_inv().expect("u != -1");
        if i == j {
            Vec::new()
        } else if i < j {
            vec![(a, b, self.u.clone() * c.clone()), (b, a, self.sqrt_u.clone() * c)]
        } else {
            vec![(b, a, self.sqrt_u.clone() * c.clone()), (a, b, c)]
        }
    }

    fn local_vector(&self, i: usize, x: &[(usize, F)], gate: impl Fn(usize, usize) -> Local<F>) -> SparseVec<F> {
        let (pa, pb) = (self.space.place(i), self.space.place(i + 1));
        sparse_from(x.iter().flat_map(|(idx, c)| {
            let (a, b) = (self.space.digit(*idx, i), self.space.digit(*idx, i + 1));
            let base = idx - a * pa - b * pb;
            gate(a, b)
                .into_iter()
                .map(move |(a2, b2, k)| (base + a2 * pa + b2 * pb, k * c.clone()))
        }))
    }

    fn local_operator(&self, i: usize, gate: impl Fn(usize, usize) -> Local<F> + Sync + Send) -> Operator<F> {
        Operator::from_fn(self.space.dim, |c| self.local_vector(i, &[(c, F::one())], &gate))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.space.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.space.n });
        }
        Ok(())
    }

    /// 𝐓_i x
    pub fn act_t(&self, i: usize, x: &[(usize, F)]) -> Result<SparseVec<F>> {
        self.check_index(i)?;
        Ok(self.local_vector(i, x, |a, b| self.t_gate(a, b)))
    }

    /// 𝐄_i x
    pub fn act_e(&self, i: usize, x: &[(usize, F)]) -> Result<SparseVec<F>> {
        self.check_index(i)?;
        Ok(self.local_vector(i, x, |a, b| self.e_gate(a, b)))
    }

    /// The gate 𝐅 placed at factors i, i+1, as defined directly.
    pub fn f_operator(&self, i: usize) -> Result<Operator<F>> {
        self.check_index(i)?;
        Ok(self.local_operator(i, |a, b| self.f_gate(a, b)))
    }

    /// 𝒥(E_I T_w) x, applying the letters of the reduced word right to left.
    pub fn act_basis(&self, tables: &BasisTables, key: BasisKey, x: &[(usize, F)]) -> Result<SparseVec<F>> {
        if tables.n() != self.space.n {
            return Err(Error::SizeMismatch {
                expected: self.space.n,
                found: tables.n(),
            });
        }
        let mut v = x.to_vec();
        for &i in tables.word(key.perm).iter().rev() {
            v = self.act_t(i, &v)?;
        }
        let p = tables.partition(key.partition);
        v.retain(|(idx, _)| self.space.tie_kept(p, *idx));
        Ok(v)
    }

    /// 𝒥(a) x
    pub fn act(&self, tables: &BasisTables, a: &AlgebraElement<F>, x: &[(usize, F)]) -> Result<SparseVec<F>> {
        let mut out = Vec::new();
        for (key, c) in a.terms() {
            let y = self.act_basis(tables, *key, x)?;
            out.extend(y.into_iter().map(|(k, v)| (k, v * c.clone())));
        }
        Ok(sparse_from(out))
    }

    /// The operator 𝒥(a).
    pub fn represent(&self, tables: &BasisTables, a: &AlgebraElement<F>) -> Result<Operator<F>> {
        if a.n() != self.space.n {
            return Err(Error::SizeMismatch {
                expected: self.space.n,
                found: a.n(),
            });
        }
        let cols: Result<Vec<_>> = (0..self.space.dim)
            .into_par_iter()
            .map(|c| self.act(tables, a, &[(c, F::one())]))
            .collect();
        Ok(Operator::from_columns(cols?))
    }
}

impl<F: Field> GeneratorModel for JimboModel<F> {
    type Scalar = F;
    type Elem = Operator<F>;

    fn n(&self) -> usize {
        self.space.n
    }
    fn sqrt_u(&self) -> F {
        self.sqrt_u.clone()
    }
    fn one(&self) -> Operator<F> {
        Operator::identity(self.space.dim)
    }
    fn t(&self, i: usize) -> Result<Operator<F>> {
        self.check_index(i)?;
        Ok(self.t_ops[i - 1].clone())
    }
    fn e(&self, i: usize) -> Result<Operator<F>> {
        self.check_index(i)?;
        Ok(self.e_ops[i - 1].clone())
    }
    fn mul(&self, a: &Operator<F>, b: &Operator<F>) -> Result<Operator<F>> {
        a.compose(b)
    }
    fn add(&self, a: &Operator<F>, b: &Operator<F>) -> Result<Operator<F>> {
        a.add(b)
    }
    fn scale(&self, a: &Operator<F>, c: &F) -> Operator<F> {
        a.scale(c)
    }
    fn equal(&self, a: &Operator<F>, b: &Operator<F>) -> Result<bool> {
        a.check_dim(b)?;
        Ok(a == b)
    }
}

/// Outcome of comparing 𝒥(ab) with 𝒥(a)𝒥(b) on random basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismCheck {
    pub pairs: usize,
    pub failures: Vec<(String, String)>,
}

/// Checks 𝒥(ab) = 𝒥(a)∘𝒥(b) on `pairs` random basis pairs. Both sides
/// commute with the relabelings behind [`TensorSpace::canonical`], so they
/// are compared on representative columns only.
pub fn check_homomorphism<F: Field>(
    engine: &Engine<F>,
    model: &JimboModel<F>,
    pairs: usize,
    seed: u64,
) -> Result<HomomorphismCheck> {
    let tables = engine.tables();
    let keys: Vec<BasisKey> = tables.keys().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<(BasisKey, BasisKey)> = (0..pairs)
        .map(|_| (*keys.choose(&mut rng).unwrap(), *keys.choose(&mut rng).unwrap()))
        .collect();
    let reps = model.space.representatives();
    let results: Result<Vec<Option<(String, String)>>> = chosen
        .par_iter()
        .map(|&(a, b)| {
            let ea = engine.key_element(a);
            let eb = engine.key_element(b);
            let ab = engine.mul(&ea, &eb)?;
            for &c in &reps {
                let x = [(c, F::one())];
                let lhs = model.act(tables, &ab, &x)?;
                let rhs = model.act_basis(tables, a, &model.act_basis(tables, b, &x)?)?;
                if lhs != rhs {
                    return Ok(Some((tables.element(a).to_string(), tables.element(b).to_string())));
                }
            }
            Ok(None)
        })
        .collect();
    Ok(HomomorphismCheck {
        pairs,
        failures: results?.into_iter().flatten().collect(),
    })
}

/// Relation checks in 𝒥_n plus the homomorphism spot check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub relations: RelationReport,
    pub homomorphism: HomomorphismCheck,
}

impl RepresentationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.all_hold() && self.homomorphism.failures.is_empty()
    }
}

/// Defining relations as operators in 𝒥_n and `pairs` random homomorphism checks.
pub fn verify_relations_in_rep<F: Field>(engine: &Engine<F>, pairs: usize, seed: u64) -> Result<RepresentationReport> {
    let model = JimboModel::braids_and_ties(engine.n(), engine.sqrt_u().clone())?;
    let relations = check_families(&model, "jimbo", &[Family::Defining]);
    let homomorphism = check_homomorphism(engine, &model, pairs, seed)?;
    Ok(RepresentationReport { relations, homomorphism })
}

/// The classical harness on (K²)^{⊗n}: Hecke relations (the defining
/// relations with E_i = 1), the vanishing of h_{ij} and of the images of the
/// quotient relations, the Temperley-Lieb idempotent relations, and the
/// explicit 𝐅 gate against (1 + 𝐉)/(1 + u).
pub fn classical_jimbo_check<F: Field>(n: usize, sqrt_u: F) -> Result<RelationReport> {
    let model = JimboModel::classical(n, sqrt_u)?;
    let mut report = check_families(
        &model,
        "classical",
        &[Family::Defining, Family::Quotient, Family::TemperleyLieb],
    );
    let inv = (model.u.clone() + F::one()).checked_inv()?;
    for i in 1..n {
        let via_j = model.one().add(&model.t(i)?)?.scale(&inv);
        report.checks.push(RelationCheck {
            family: Family::TemperleyLieb,
            id: "tl-f-gate".into(),
            indices: vec![i],
            statement: "F = (1 + J)/(1 + u)".into(),
            holds: model.f_operator(i)? == via_j,
            error: None,
        });
    }
    Ok(report)
}

/// Basis vectors on which 𝒥(E_1E_2T_{12}) does not vanish, for the space
/// with lower indices up to `lower`; empty when the relation holds.
pub fn quotient_relation_witnesses<F: Field>(engine: &Engine<F>, lower: usize) -> Result<Vec<usize>> {
    let n = engine.n();
    let model = JimboModel::with_space(TensorSpace::new(n, lower, n)?, engine.sqrt_u().clone())?;
    let g = engine.ideal_generator()?;
    let tables = engine.tables();
    let found: Result<Vec<Option<usize>>> = (0..model.space.dim)
        .into_par_iter()
        .map(|c| Ok((!model.act(tables, &g, &[(c, F::one())])?.is_empty()).then_some(c)))
        .collect();
    Ok(found?.into_iter().flatten().collect())
}

/// Rank of the span of {𝒥(E_I T_w)} at one value of √u.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankAtPoint {
    pub point: String,
    pub rank: usize,
}

/// Ranks for one choice of tensor space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankSeries {
    /// Number of lower indices; the upper indices always run over 1..n.
    pub lower: usize,
    pub space_dim: usize,
    /// Number of representative columns actually used.
    pub representative_columns: usize,
    pub symbolic_rank: Option<usize>,
    pub points: Vec<RankAtPoint>,
    pub agree: bool,
    pub kernel_dim: usize,
    /// Whether E_1E_2T_{12} acts as zero (checked at the first point).
    pub kills_ideal_generator: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub n: usize,
    pub algebra_dim: usize,
    pub series: Vec<RankSeries>,
}

/// Rank of b ↦ 𝒥(b) over the basis. Columns are restricted to canonical
/// representatives: every generator commutes with the relabelings that
/// identify a class, so an operator in the image vanishes iff it vanishes
/// on the representatives.
pub fn representation_rank_at<F: Field>(n: usize, lower: usize, sqrt_u: F) -> Result<usize> {
    let tables = BasisTables::new(n)?;
    let model = JimboModel::with_space(TensorSpace::new(n, lower, n)?, sqrt_u)?;
    let reps = model.space.representatives();
    let dim = model.space.dim;
    let images: Result<Vec<SparseVec<F>>> = tables
        .keys()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&key| {
            let mut row = Vec::new();
            for (slot, &x) in reps.iter().enumerate() {
                let y = model.act_basis(&tables, key, &[(x, F::one())])?;
                row.extend(y.into_iter().map(|(k, c)| (slot * dim + k, c)));
            }
            Ok(row)
        })
        .collect();
    let mut ech: Echelon<F> = Echelon::new(reps.len() * dim);
    for row in images? {
        ech.insert(&row);
    }
    Ok(ech.rank())
}

/// Ranks at each point (values of √u) for the full space (n lower indices)
/// and for two lower indices, optionally also over Q(√u).
pub fn representation_rank(
    n: usize,
    points: &[num_rational::BigRational],
    symbolic: bool,
) -> Result<RankReport> {
    use crate::scalar::RationalFunction;
    let tables = BasisTables::new(n)?;
    let mut lowers = vec![n];
    if n > 2 {
        lowers.push(2);
    }
    let mut series = Vec::new();
    for lower in lowers {
        let space = TensorSpace::new(n, lower, n)?;
        let mut ranks = Vec::new();
        for p in points {
            ranks.push(RankAtPoint {
                point: p.to_string(),
                rank: representation_rank_at(n, lower, p.clone())?,
            });
        }
        let symbolic_rank = if symbolic {
            Some(representation_rank_at(n, lower, RationalFunction::s())?)
        } else {
            None
        };
        let mut all: Vec<usize> = ranks.iter().map(|r| r.rank).collect();
        all.extend(symbolic_rank);
        let agree = all.windows(2).all(|w| w[0] == w[1]);
        let best = all.iter().copied().max().unwrap_or(0);
        let kills = match points.first() {
            Some(p) if n >= 3 => quotient_relation_witnesses(&Engine::new(n, p.clone())?, lower)?.is_empty(),
            _ => n < 3,
        };
        series.push(RankSeries {
            lower,
            space_dim: space.dim(),
            representative_columns: space.representatives().len(),
            symbolic_rank,
            points: ranks,
            agree,
            kernel_dim: tables.dim() - best,
            kills_ideal_generator: kills,
        });
    }
    Ok(RankReport {
        n,
        algebra_dim: tables.dim(),
        series,
    })
}

/// The space and vector v_1^1⊗v_2^1⊗v_1^2 for n = 3.
pub fn sample_vector<F: Field>() -> Result<(TensorSpace, SparseVec<F>)> {
    let space = TensorSpace::new(3, 3, 3)?;
    let x = space.encode(&[(1, 1), (2, 1), (1, 2)])?;
    Ok((space, vec![(x, F::one())]))
}

/// 𝒥_3(T_{12}) applied to the sample vector.
pub fn steinberg_on_sample<F: Field>(sqrt_u: F) -> Result<HashMap<Vec<(usize, usize)>, F>> {
    let engine = Engine::new(3, sqrt_u.clone())?;
    let model = JimboModel::braids_and_ties(3, sqrt_u)?;
    let (space, x) = sample_vector::<F>()?;
    let y = model.act(engine.tables(), &engine.steinberg(1, 2)?, &x)?;
    Ok(vector_by_factors(&space, &y))
}

/// The six terms u, -u, √u, -√u, u, √u of 𝒥_3(T_{12}) on the sample vector.
pub fn steinberg_sample_expected<F: Field>(sqrt_u: F) -> HashMap<Vec<(usize, usize)>, F> {
    let u = sqrt_u.clone() * sqrt_u.clone();
    let (a, b, c) = ((1, 1), (2, 1), (1, 2));
    HashMap::from([
        (vec![a, b, c], u.clone()),
        (vec![a, c, b], -u.clone()),
        (vec![b, a, c], sqrt_u.clone()),
        (vec![b, c, a], -sqrt_u.clone()),
        (vec![c, a, b], u),
        (vec![c, b, a], sqrt_u),
    ])
}

/// Sparse vector rendered as "c·v1^1⊗v2^1 + ...".
pub fn render_vector<F: Field>(space: &TensorSpace, x: &[(usize, F)]) -> String {
    if x.is_empty() {
        return "0".into();
    }
    x.iter()
        .map(|(k, c)| format!("({c})·{}", space.basis_name(*k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Converts a sparse vector to a map keyed by factor lists, for comparisons.
pub fn vector_by_factors<F: Field>(space: &TensorSpace, x: &[(usize, F)]) -> HashMap<Vec<(usize, usize)>, F> {
    x.iter().map(|(k, c)| (space.decode(*k), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RationalFunction as Rf;
    use num_traits::One;

    fn model(n: usize) -> JimboModel<Rf> {
        JimboModel::braids_and_ties(n, Rf::s()).unwrap()
    }

    #[test]
    fn encode_decode() {
        let s = TensorSpace::new(3, 3, 3).unwrap();
        assert_eq!(s.dim(), 729);
        for idx in [0, 1, 100, 728] {
            assert_eq!(s.encode(&s.decode(idx)).unwrap(), idx);
        }
        assert!(s.encode(&[(1, 1), (4, 1), (1, 1)]).is_err());
    }

    #[test]
    fn t_gate_cases() {
        let m = model(2);
        let s = m.space().clone();
        let x = s.encode(&[(1, 1), (1, 2)]).unwrap();
        assert_eq!(
            m.act_t(1, &[(x, Rf::one())]).unwrap(),
            vec![(s.encode(&[(1, 2), (1, 1)]).unwrap(), -Rf::one())]
        );
        let y = s.encode(&[(1, 1), (2, 1)]).unwrap();
        let out = vector_by_factors(&s, &m.act_t(1, &[(y, Rf::one())]).unwrap());
        assert_eq!(out[&vec![(1, 1), (2, 1)]], Rf::u() - Rf::one());
        assert_eq!(out[&vec![(2, 1), (1, 1)]], Rf::s());
        let z = s.encode(&[(1, 1), (2, 2)]).unwrap();
        assert!(m.act_e(1, &[(z, Rf::one())]).unwrap().is_empty());
        assert!(m.act_t(2, &[(z, Rf::one())]).is_err());
    }

    #[test]
    fn canonical_classes() {
        let s = TensorSpace::new(3, 3, 3).unwrap();
        let a = s.encode(&[(3, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(s.decode(s.canonical(a)), vec![(2, 1), (1, 1), (1, 2)]);
        let reps = s.representatives();
        assert!(reps.iter().all(|&r| s.canonical(r) == r));
    }

    #[test]
    fn triplet_export() {
        let m = JimboModel::classical(2, Rf::s()).unwrap();
        let t = m.t(1).unwrap();
        let text = t.to_triplet_text();
        assert_eq!(text.lines().count(), t.nnz());
        assert!(text.contains("1 1 u-1"), "{text}");
    }
}
