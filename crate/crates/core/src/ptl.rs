//! Quotients of E_n by two-sided ideals, in particular PTL_n = E_n / ⟨E_1E_2T_{12}⟩.
//!
//! Quotient elements are reduced representatives in E_n: the ideal is kept as
//! an echelon basis over the b_n·n! coordinates and reduction subtracts pivot
//! rows.

use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Engine};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::bell;
use crate::relations::{check_families, Family, GeneratorModel, RelationCheck};
use crate::scalar::{Field, RationalFunction};

/// Catalan number C_n.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Echelon basis of a two-sided ideal of E_n.
#[derive(Clone, Debug)]
pub struct IdealBasis<F: Field> {
    n: usize,
    perm_count: usize,
    rows: Echelon<F>,
}

impl<F: Field> IdealBasis<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.rank()
    }

    /// Codimension in E_n.
    pub fn quotient_dim(&self, engine: &Engine<F>) -> usize {
        engine.dim() - self.dim()
    }

    fn coords(&self, a: &AlgebraElement<F>) -> Result<Vec<(usize, F)>> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: a.n(),
            });
        }
        Ok(a.to_sparse(self.perm_count))
    }

    /// Canonical coset representative: zero at every pivot coordinate.
    pub fn reduce(&self, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        let r = self.rows.reduce(&self.coords(a)?);
        Ok(AlgebraElement::from_sparse(self.n, self.perm_count, r))
    }

    pub fn contains(&self, a: &AlgebraElement<F>) -> Result<bool> {
        Ok(self.rows.contains(&self.coords(a)?))
    }

    pub fn equal(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<bool> {
        self.contains(&a.checked_sub(b)?)
    }

    /// The echelon rows as algebra elements.
    pub fn rows(&self) -> Vec<AlgebraElement<F>> {
        self.rows
            .rows()
            .map(|r| AlgebraElement::from_sparse(self.n, self.perm_count, r.iter().cloned()))
            .collect()
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &IdealBasis<F>) -> Result<bool> {
        for r in self.rows() {
            if !other.contains(&r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn generator_products<F: Field>(engine: &Engine<F>, a: &AlgebraElement<F>) -> Result<Vec<AlgebraElement<F>>> {
    let mut out = Vec::with_capacity(4 * engine.n());
    for i in 1..engine.n() {
        out.push(engine.left_mul_t(i, a)?);
        out.push(engine.right_mul_t(a, i)?);
        out.push(engine.left_mul_e(i, a)?);
        out.push(engine.right_mul_e(a, i)?);
    }
    Ok(out)
}

/// Two-sided ideal generated by `generators`, by closing their span under
/// left and right multiplication by every T_i and E_i.
pub fn build_ideal_from<F: Field>(engine: &Engine<F>, generators: &[AlgebraElement<F>]) -> Result<IdealBasis<F>> {
    let n = engine.n();
    let perm_count = engine.tables().perm_count();
    let mut ib = IdealBasis {
        n,
        perm_count,
        rows: Echelon::new(engine.dim()),
    };
    let mut queue: Vec<AlgebraElement<F>> = Vec::new();
    for g in generators {
        let r = ib.reduce(g)?;
        if !r.is_zero() {
            ib.rows.insert(&r.to_sparse(perm_count));
            queue.push(r);
        }
    }
    while let Some(x) = queue.pop() {
        let products = generator_products(engine, &x)?;
        let reduced: Vec<AlgebraElement<F>> =
            products.par_iter().map(|p| ib.reduce(p)).collect::<Result<_>>()?;
        for r in reduced {
            // an earlier insertion in this batch may already cover it
            let r = ib.reduce(&r)?;
            if !r.is_zero() {
                ib.rows.insert(&r.to_sparse(perm_count));
                queue.push(r);
            }
        }
    }
    Ok(ib)
}

/// The ideal generated by E_1E_2T_{12}.
pub fn build_ideal<F: Field>(engine: &Engine<F>) -> Result<IdealBasis<F>> {
    build_ideal_from(engine, &[engine.ideal_generator()?])
}

/// The ideal generated by the Steinberg element T_{12} alone.
pub fn build_steinberg_ideal<F: Field>(engine: &Engine<F>) -> Result<IdealBasis<F>> {
    build_ideal_from(engine, &[engine.steinberg(1, 2)?])
}

/// For every row r and generator x, x·r and r·x reduce to zero.
pub fn verify_closure<F: Field>(engine: &Engine<F>, ib: &IdealBasis<F>) -> Result<bool> {
    let rows = ib.rows();
    let flags: Vec<bool> = rows
        .par_iter()
        .map(|r| -> Result<bool> {
            for p in generator_products(engine, r)? {
                if !ib.contains(&p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<_>>()?;
    Ok(flags.into_iter().all(|f| f))
}

/// The engine with equality taken modulo an ideal.
pub struct QuotientModel<'a, F: Field> {
    pub engine: &'a Engine<F>,
    pub ideal: &'a IdealBasis<F>,
}

impl<F: Field> GeneratorModel for QuotientModel<'_, F> {
    type Scalar = F;
    type Elem = AlgebraElement<F>;

    fn n(&self) -> usize {
        self.engine.n()
    }
    fn sqrt_u(&self) -> F {
        self.engine.sqrt_u().clone()
    }
    fn one(&self) -> AlgebraElement<F> {
        self.engine.one()
    }
    fn t(&self, i: usize) -> Result<AlgebraElement<F>> {
        self.engine.t(i)
    }
    fn e(&self, i: usize) -> Result<AlgebraElement<F>> {
        self.engine.e(i)
    }
    fn mul(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.engine.mul(a, b)
    }
    fn add(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        a.checked_add(b)
    }
    fn scale(&self, a: &AlgebraElement<F>, c: &F) -> AlgebraElement<F> {
        a.scale(c)
    }
    fn equal(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<bool> {
        self.ideal.equal(a, b)
    }
    fn t_inv(&self, i: usize) -> Result<AlgebraElement<F>> {
        self.engine.t_inv(i)
    }
}

/// Where a presentation check was evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Context {
    /// In E_n itself.
    Algebra,
    /// Modulo ⟨E_1E_2T_{12}⟩.
    Ideal,
    /// Modulo ⟨T_{12}⟩.
    SteinbergIdeal,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PresentationCheck {
    pub context: Context,
    #[serde(flatten)]
    pub check: RelationCheck,
}

const E_RELATIONS: [&str; 2] = ["e-commute", "e-idempotent"];

fn presentation_checks<M: GeneratorModel>(model: &M, context: Context) -> Vec<PresentationCheck> {
    let report = check_families(
        model,
        "presentation",
        &[Family::Defining, Family::FPresentation, Family::LPresentation],
    );
    report
        .checks
        .into_iter()
        .filter(|c| c.family != Family::Defining || E_RELATIONS.contains(&c.id.as_str()))
        .map(|check| PresentationCheck { context, check })
        .collect()
}

/// Both presentations and the E-relations, in E_n and modulo each given ideal.
pub fn verify_presentations<F: Field>(
    engine: &Engine<F>,
    ideals: &[(Context, &IdealBasis<F>)],
) -> Vec<PresentationCheck> {
    let mut out = presentation_checks(engine, Context::Algebra);
    for (context, ideal) in ideals {
        out.extend(presentation_checks(&QuotientModel { engine, ideal }, *context));
    }
    out
}

/// Product of descending runs (F_{i_1}···F_{j_1})···(F_{i_k}···F_{j_k}).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FReducedWord {
    /// (i_l, j_l) with j_l ≤ i_l.
    pub runs: Vec<(usize, usize)>,
}

impl FReducedWord {
    /// Letter indices in multiplication order.
    pub fn letters(&self) -> Vec<usize> {
        self.runs.iter().flat_map(|&(i, j)| (j..=i).rev()).collect()
    }

    pub fn element<F: Field>(&self, engine: &Engine<F>) -> Result<AlgebraElement<F>> {
        let mut acc = engine.one();
        for i in self.letters() {
            acc = engine.mul(&acc, &engine.f(i)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for FReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "∅");
        }
        for &(i, j) in &self.runs {
            write!(f, "(")?;
            for k in (j..=i).rev() {
                write!(f, "F_{k}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All F-reduced words: i's and j's strictly increasing, j_l ≤ i_l. Ordered
/// by length, then by letter sequence.
pub fn enumerate_f_reduced(n: usize) -> Vec<FReducedWord> {
    fn extend(n: usize, runs: &mut Vec<(usize, usize)>, out: &mut Vec<FReducedWord>) {
        out.push(FReducedWord { runs: runs.clone() });
        let (i0, j0) = runs.last().copied().unwrap_or((0, 0));
        for i in i0 + 1..n {
            for j in j0 + 1..=i {
                runs.push((i, j));
                extend(n, runs, out);
                runs.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out.sort_by_key(|w| {
        let l = w.letters();
        (l.len(), l)
    });
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpanningReport {
    pub candidates: usize,
    pub rank: usize,
    pub quotient_dim: usize,
    /// Every E_I·F is nonzero modulo the ideal.
    pub all_nonzero: bool,
    pub spans: bool,
    pub independent: bool,
}

/// Rank modulo `ib` of {E_I·F : I a set partition, F F-reduced}.
pub fn spanning_check<F: Field>(engine: &Engine<F>, ib: &IdealBasis<F>) -> Result<SpanningReport> {
    let tables = engine.tables();
    let words = enumerate_f_reduced(engine.n());
    let fs: Vec<AlgebraElement<F>> = words.iter().map(|w| w.element(engine)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..tables.partition_count())
        .flat_map(|p| (0..fs.len()).map(move |k| (p, k)))
        .collect();
    let reduced: Vec<AlgebraElement<F>> = pairs
        .par_iter()
        .map(|&(p, k)| {
            let e = engine.e_partition(tables.partition(p as u32))?;
            ib.reduce(&engine.mul(&e, &fs[k])?)
        })
        .collect::<Result<_>>()?;
    let mut ech: Echelon<F> = Echelon::new(engine.dim());
    let mut all_nonzero = true;
    for r in &reduced {
        all_nonzero &= !r.is_zero();
        ech.insert(&r.to_sparse(tables.perm_count()));
    }
    let quotient_dim = ib.quotient_dim(engine);
    Ok(SpanningReport {
        candidates: reduced.len(),
        rank: ech.rank(),
        quotient_dim,
        all_nonzero,
        spans: ech.rank() == quotient_dim,
        independent: ech.rank() == reduced.len(),
    })
}

/// Ideal statistics at one value of √u.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientAtPoint {
    /// "symbolic" or the value of √u.
    pub point: String,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub closure_verified: bool,
    pub reduce_idempotent: bool,
    pub spanning: SpanningReport,
    /// E_iE_jT_{ij} for every adjacent pair generates the same ideal.
    pub single_relation_suffices: bool,
    /// T_{12}E_1E_2 generates the same ideal.
    pub mirror_generates_same: bool,
    /// The quotient by ⟨T_{12}⟩, which the F and L presentations describe.
    pub steinberg_ideal_dim: usize,
    pub steinberg_quotient_dim: usize,
    pub steinberg_spanning: SpanningReport,
    /// ⟨E_1E_2T_{12}⟩ ⊆ ⟨T_{12}⟩.
    pub ideal_in_steinberg_ideal: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientReport {
    pub n: usize,
    pub algebra_dim: usize,
    /// At the first point.
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    /// b_n·C_n
    pub conjectured_dim: u128,
    pub spanning_rank: usize,
    pub points_agree: bool,
    pub presentation_checks: Vec<PresentationCheck>,
    pub specialization_points: Vec<QuotientAtPoint>,
}

impl QuotientReport {
    /// Invariants that must hold regardless of the conjectures.
    pub fn invariants_hold(&self) -> bool {
        self.points_agree
            && self.specialization_points.iter().all(|p| {
                p.closure_verified
                    && p.reduce_idempotent
                    && p.single_relation_suffices
                    && p.mirror_generates_same
                    && p.ideal_in_steinberg_ideal
            })
    }

    pub fn check(&self, context: Context, id: &str, indices: &[usize]) -> Option<&PresentationCheck> {
        self.presentation_checks
            .iter()
            .find(|c| c.context == context && c.check.id == id && c.check.indices == indices)
    }
}

fn same_ideal<F: Field>(a: &IdealBasis<F>, b: &IdealBasis<F>) -> Result<bool> {
    Ok(a.dim() == b.dim() && a.is_subspace_of(b)?)
}

/// Ideal, closure, spanning and comparison data at the engine's √u.
pub fn quotient_at<F: Field>(engine: &Engine<F>, point: String) -> Result<(QuotientAtPoint, IdealBasis<F>, IdealBasis<F>)> {
    let n = engine.n();
    if n < 3 {
        return Err(Error::Unsupported {
            n,
            reason: "the ideal needs two adjacent generators".into(),
        });
    }
    let ib = build_ideal(engine)?;
    let closure_verified = verify_closure(engine, &ib)?;
    let mut reduce_idempotent = true;
    for key in engine.tables().keys() {
        let r = ib.reduce(&engine.key_element(key))?;
        reduce_idempotent &= ib.reduce(&r)? == r;
    }
    let mut all: Vec<AlgebraElement<F>> = Vec::new();
    for i in 1..n - 1 {
        for (a, b) in [(i, i + 1), (i + 1, i)] {
            all.push(engine.product([&engine.e(a)?, &engine.e(b)?, &engine.steinberg(a, b)?])?);
        }
    }
    let single_relation_suffices = same_ideal(&build_ideal_from(engine, &all)?, &ib)?;
    let mirror = engine.product([&engine.steinberg(1, 2)?, &engine.e(1)?, &engine.e(2)?])?;
    let mirror_generates_same = same_ideal(&build_ideal_from(engine, &[mirror])?, &ib)?;
    let spanning = spanning_check(engine, &ib)?;
    let sb = build_steinberg_ideal(engine)?;
    let steinberg_spanning = spanning_check(engine, &sb)?;
    let at = QuotientAtPoint {
        point,
        ideal_dim: ib.dim(),
        quotient_dim: ib.quotient_dim(engine),
        closure_verified,
        reduce_idempotent,
        spanning,
        single_relation_suffices,
        mirror_generates_same,
        steinberg_ideal_dim: sb.dim(),
        steinberg_quotient_dim: sb.quotient_dim(engine),
        steinberg_spanning,
        ideal_in_steinberg_ideal: ib.is_subspace_of(&sb)?,
    };
    Ok((at, ib, sb))
}

fn assemble(n: usize, algebra_dim: usize, points: Vec<QuotientAtPoint>, checks: Vec<PresentationCheck>) -> QuotientReport {
    let first = &points[0];
    let key = |p: &QuotientAtPoint| (p.ideal_dim, p.spanning.rank, p.steinberg_ideal_dim, p.steinberg_spanning.rank);
    QuotientReport {
        n,
        algebra_dim,
        ideal_dim: first.ideal_dim,
        quotient_dim: first.quotient_dim,
        conjectured_dim: bell(n) * catalan(n),
        spanning_rank: first.spanning.rank,
        points_agree: points.iter().all(|p| key(p) == key(first)),
        presentation_checks: checks,
        specialization_points: points,
    }
}

/// Quotient report over Q(√u).
pub fn quotient_report_symbolic(n: usize) -> Result<QuotientReport> {
    let engine = Engine::<RationalFunction>::symbolic(n)?;
    let (at, ib, sb) = quotient_at(&engine, "symbolic".into())?;
    let checks = verify_presentations(&engine, &[(Context::Ideal, &ib), (Context::SteinbergIdeal, &sb)]);
    Ok(assemble(n, engine.dim(), vec![at], checks))
}

/// Quotient report at rational values of √u; presentation checks use the first point.
pub fn quotient_report_at_points(n: usize, points: &[BigRational]) -> Result<QuotientReport> {
    if points.is_empty() {
        return Err(Error::Parse("at least one specialization point is required".into()));
    }
    let mut at_points = Vec::new();
    let mut checks = Vec::new();
    for (k, p) in points.iter().enumerate() {
        let engine = Engine::new(n, p.clone())?;
        let (at, ib, sb) = quotient_at(&engine, p.to_string())?;
        if k == 0 {
            checks = verify_presentations(&engine, &[(Context::Ideal, &ib), (Context::SteinbergIdeal, &sb)]);
        }
        at_points.push(at);
    }
    Ok(assemble(n, Engine::new(n, points[0].clone())?.dim(), at_points, checks))
}

/// True when the engine's √u is neither 0 nor a root of u + 1 or u - 1.
pub fn generic_point<F: Field>(sqrt_u: &F) -> bool {
    let u = sqrt_u.clone() * sqrt_u.clone();
    !sqrt_u.is_zero() && !(u.clone() + F::one()).is_zero() && !(u - F::one()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        assert_eq!((0..7).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn f_reduced_words_small() {
        let shown = |n| enumerate_f_reduced(n).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(shown(2), vec!["∅", "(F_1)"]);
        assert_eq!(shown(3), vec!["∅", "(F_1)", "(F_2)", "(F_1)(F_2)", "(F_2F_1)"]);
        for n in 1..8 {
            assert_eq!(enumerate_f_reduced(n).len() as u128, catalan(n));
        }
    }

    #[test]
    fn reduce_kills_generator_and_keeps_one() {
        let engine = Engine::<RationalFunction>::symbolic(3).unwrap();
        let ib = build_ideal(&engine).unwrap();
        assert!(ib.reduce(&engine.ideal_generator().unwrap()).unwrap().is_zero());
        assert_eq!(ib.reduce(&engine.one()).unwrap(), engine.one());
        assert!(verify_closure(&engine, &ib).unwrap());
    }

    #[test]
    fn n2_candidates_span_e2() {
        let engine = Engine::<RationalFunction>::symbolic(2).unwrap();
        let ib = build_ideal_from(&engine, &[]).unwrap();
        let s = spanning_check(&engine, &ib).unwrap();
        assert_eq!((s.candidates, s.rank, s.quotient_dim), (4, 4, 4));
    }
}
