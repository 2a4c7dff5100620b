//! The Markov-type trace ρ_n on E_n with parameters A, B, built level by
//! level as the solution of a linear system.
//!
//! Unknowns are the values of ρ_n on the basis. Constraint coefficients lie
//! in the scalar field and right-hand sides in F[A, B], so elimination runs
//! over the scalar field with polynomial payloads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, BasisKey, Engine};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, SparseVec};
use crate::ptl::build_ideal;
use crate::scalar::{Field, Poly2};

/// How trace symmetry is imposed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    /// ρ(ab) = ρ(ba) for every pair of basis elements.
    AllPairs,
    /// ρ(xg) = ρ(gx) for basis x and generators g; spans the same constraints.
    Generators,
}

/// One group of Markov rule instances.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// ρ(x T_{n-1}) = A ρ(x)
    XT,
    /// ρ(x E_{n-1} T_{n-1}) = A ρ(x)
    XET,
    /// ρ(x E_{n-1}) = B ρ(x)
    XE,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::XT, Rule::XET, Rule::XE];
}

/// How many instances of a rule follow from all other constraints.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RuleRedundancy {
    pub rule: Rule,
    pub instances: usize,
    pub implied: usize,
}

/// ρ_n as a table over the basis.
#[derive(Clone, Debug)]
pub struct TraceFunctional<F: Field> {
    pub n: usize,
    /// Indexed like the basis keys; empty unless the system is consistent with nullity 0.
    pub values: Vec<Poly2<F>>,
    pub exists: bool,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
    /// Description of a constraint that could not be satisfied.
    pub witness: Option<String>,
    pub symmetry: Symmetry,
    pub redundancy: Vec<RuleRedundancy>,
}

impl<F: Field> TraceFunctional<F> {
    pub fn unique(&self) -> bool {
        self.exists && self.nullity == 0
    }

    pub fn value(&self, engine: &Engine<F>, key: BasisKey) -> Result<&Poly2<F>> {
        if !self.unique() {
            return Err(Error::NoTrace(self.n));
        }
        Ok(&self.values[engine.tables().key_index(key)])
    }
}

/// Linear extension of the table.
pub fn evaluate_trace<F: Field>(tf: &TraceFunctional<F>, engine: &Engine<F>, a: &AlgebraElement<F>) -> Result<Poly2<F>> {
    if a.n() != tf.n || engine.n() != tf.n {
        return Err(Error::SizeMismatch {
            expected: tf.n,
            found: a.n(),
        });
    }
    let mut acc: Poly2<F> = num_traits::Zero::zero();
    for (key, c) in a.terms() {
        acc.add_scaled(c, tf.value(engine, *key)?);
    }
    Ok(acc)
}

struct Constraint<F: Field> {
    row: SparseVec<F>,
    rhs: Poly2<F>,
    label: String,
    rule: Option<Rule>,
}

fn row_of<F: Field>(engine: &Engine<F>, a: &AlgebraElement<F>) -> SparseVec<F> {
    let tables = engine.tables();
    let mut row: SparseVec<F> = a.terms().map(|(k, c)| (tables.key_index(*k), c.clone())).collect();
    row.sort_by_key(|(k, _)| *k);
    row
}

fn symmetry_constraints<F: Field>(engine: &Engine<F>, symmetry: Symmetry) -> Result<Vec<Constraint<F>>> {
    let tables = engine.tables();
    let keys: Vec<BasisKey> = tables.keys().collect();
    let zero: Poly2<F> = num_traits::Zero::zero();
    let jobs: Vec<(usize, usize)> = match symmetry {
        Symmetry::AllPairs => (0..keys.len())
            .flat_map(|a| (a + 1..keys.len()).map(move |b| (a, b)))
            .collect(),
        // generators encoded as 2(i-1) for T_i, 2(i-1)+1 for E_i
        Symmetry::Generators => (0..keys.len())
            .flat_map(|a| (0..2 * (engine.n() - 1)).map(move |g| (a, g)))
            .collect(),
    };
    jobs.par_iter()
        .map(|&(a, b)| {
            let x = engine.key_element(keys[a]);
            let (diff, label) = match symmetry {
                Symmetry::AllPairs => {
                    let y = engine.key_element(keys[b]);
                    let d = engine.mul(&x, &y)?.checked_sub(&engine.mul(&y, &x)?)?;
                    (d, format!("ρ(ab - ba), a = {}, b = {}", engine.render(&x), engine.render(&y)))
                }
                Symmetry::Generators => {
                    let i = b / 2 + 1;
                    let (xg, gx, name) = if b % 2 == 0 {
                        (engine.right_mul_t(&x, i)?, engine.left_mul_t(i, &x)?, format!("T_{i}"))
                    } else {
                        (engine.right_mul_e(&x, i)?, engine.left_mul_e(i, &x)?, format!("E_{i}"))
                    };
                    (xg.checked_sub(&gx)?, format!("ρ(xg - gx), x = {}, g = {name}", engine.render(&x)))
                }
            };
            Ok(Constraint {
                row: row_of(engine, &diff),
                rhs: zero.clone(),
                label,
                rule: None,
            })
        })
        .collect()
}

fn rule_constraints<F: Field>(
    engine: &Engine<F>,
    lower: &Engine<F>,
    prev: &TraceFunctional<F>,
) -> Result<Vec<Constraint<F>>> {
    let n = engine.n();
    let keys: Vec<BasisKey> = lower.tables().keys().collect();
    let (t, e) = (engine.t(n - 1)?, engine.e(n - 1)?);
    let et = engine.mul(&e, &t)?;
    let mut out = Vec::new();
    for key in keys {
        let small = lower.key_element(key);
        let x = engine.embed_from(lower, &small)?;
        let r = prev.value(lower, key)?;
        let name = lower.render(&small);
        for (rule, g, factor, gname) in [
            (Rule::XT, &t, Poly2::a(), format!("T_{}", n - 1)),
            (Rule::XET, &et, Poly2::a(), format!("E_{}T_{}", n - 1, n - 1)),
            (Rule::XE, &e, Poly2::b(), format!("E_{}", n - 1)),
        ] {
            out.push(Constraint {
                row: row_of(engine, &engine.mul(&x, g)?),
                rhs: factor * r.clone(),
                label: format!("ρ(x·{gname}), x = {name}"),
                rule: Some(rule),
            });
        }
    }
    Ok(out)
}

fn base_trace<F: Field>() -> TraceFunctional<F> {
    TraceFunctional {
        n: 1,
        values: vec![num_traits::One::one()],
        exists: true,
        nullity: 0,
        witness: None,
        symmetry: Symmetry::AllPairs,
        redundancy: Vec::new(),
    }
}

/// Solves level n given ρ_{n-1}.
pub fn solve_level<F: Field>(
    engine: &Engine<F>,
    lower: &Engine<F>,
    prev: &TraceFunctional<F>,
    symmetry: Symmetry,
) -> Result<TraceFunctional<F>> {
    let n = engine.n();
    if lower.n() + 1 != n || prev.n + 1 != n {
        return Err(Error::SizeMismatch {
            expected: n - 1,
            found: lower.n(),
        });
    }
    let tables = engine.tables();
    let dim = engine.dim();
    let one_index = tables.key_index(BasisKey {
        partition: tables.unit_partition(),
        perm: tables.identity_perm(),
    });
    let mut constraints = vec![Constraint {
        row: vec![(one_index, F::one())],
        rhs: num_traits::One::one(),
        label: "ρ(1) = 1".into(),
        rule: None,
    }];
    constraints.extend(symmetry_constraints(engine, symmetry)?);
    constraints.extend(rule_constraints(engine, lower, prev)?);

    let mut ech: Echelon<F, Poly2<F>> = Echelon::new(dim);
    let mut witness = None;
    for c in &constraints {
        if let Insert::Dependent(residue) = ech.insert_with(&c.row, c.rhs.clone()) {
            if !num_traits::Zero::is_zero(&residue) && witness.is_none() {
                witness = Some(c.label.clone());
            }
        }
    }
    let exists = witness.is_none();
    let nullity = dim - ech.rank();
    let values = if exists && nullity == 0 {
        ech.solve_unique().ok_or(Error::NoTrace(n))?
    } else {
        Vec::new()
    };

    // which rule instances are implied by everything else
    let mut redundancy = Vec::new();
    for rule in Rule::ALL {
        let mut rest: Echelon<F, Poly2<F>> = Echelon::new(dim);
        for c in constraints.iter().filter(|c| c.rule != Some(rule)) {
            rest.insert_with(&c.row, c.rhs.clone());
        }
        let mine: Vec<&Constraint<F>> = constraints.iter().filter(|c| c.rule == Some(rule)).collect();
        let implied = mine
            .par_iter()
            .filter(|c| {
                let (r, p) = rest.reduce_with(&c.row, c.rhs.clone());
                r.is_empty() && num_traits::Zero::is_zero(&p)
            })
            .count();
        redundancy.push(RuleRedundancy {
            rule,
            instances: mine.len(),
            implied,
        });
    }

    Ok(TraceFunctional {
        n,
        values,
        exists,
        nullity,
        witness,
        symmetry,
        redundancy,
    })
}

/// ρ_1, …, ρ_n; the engines are built at the given √u.
pub fn solve_trace_tower<F: Field>(n: usize, sqrt_u: F, symmetry: Symmetry) -> Result<Vec<(Engine<F>, TraceFunctional<F>)>> {
    if n == 0 {
        return Err(Error::Unsupported {
            n,
            reason: "the trace starts at n = 1".into(),
        });
    }
    let mut out = vec![(Engine::new(1, sqrt_u.clone())?, base_trace())];
    for m in 2..=n {
        let (lower, prev) = out.last().expect("nonempty");
        if !prev.unique() {
            return Err(Error::NoTrace(m - 1));
        }
        let engine = Engine::new(m, sqrt_u.clone())?;
        let tf = solve_level(&engine, lower, prev, symmetry)?;
        out.push((engine, tf));
    }
    Ok(out)
}

/// ρ_n over the engine's field, with all-pairs symmetry for n ≤ 3.
pub fn solve_trace<F: Field>(n: usize, sqrt_u: F) -> Result<(Engine<F>, TraceFunctional<F>)> {
    let symmetry = if n <= 3 { Symmetry::AllPairs } else { Symmetry::Generators };
    Ok(solve_trace_tower(n, sqrt_u, symmetry)?.pop().expect("nonempty"))
}

/// ρ(ab) = ρ(ba) on `pairs` random elements with small integer coefficients.
pub fn check_symmetry_random<F: Field>(
    tf: &TraceFunctional<F>,
    engine: &Engine<F>,
    pairs: usize,
    seed: u64,
) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keys: Vec<BasisKey> = engine.tables().keys().collect();
    let random = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(BasisKey, F)> = (0..rng.gen_range(2..6))
            .map(|_| (keys[rng.gen_range(0..keys.len())], F::from_i64(rng.gen_range(-3..=3))))
            .collect();
        AlgebraElement::from_terms(engine.n(), terms)
    };
    let mut failures = 0;
    for _ in 0..pairs {
        let (a, b) = (random(&mut rng), random(&mut rng));
        if evaluate_trace(tf, engine, &engine.mul(&a, &b)?)? != evaluate_trace(tf, engine, &engine.mul(&b, &a)?)? {
            failures += 1;
        }
    }
    Ok(failures)
}

/// ρ on the ideal generator and the reduction used to decide when ρ passes
/// to the quotient.
#[derive(Clone, Debug)]
pub struct Factorization<F: Field> {
    /// ρ_n(E_1E_2T_{12}).
    pub value: Poly2<F>,
    /// value with A = -B.
    pub at_minus_b: Poly2<F>,
    /// value with A = -B/(1+u).
    pub at_minus_b_over_1u: Poly2<F>,
    /// value with A = B.
    pub at_b: Poly2<F>,
    /// Basis elements z with z·g not a scalar multiple of g.
    pub non_multiples: Vec<String>,
    /// Number of ideal basis rows on which ρ does not vanish under both substitutions.
    pub ideal_rows: usize,
    pub ideal_rows_not_vanishing: usize,
}

impl<F: Field> Factorization<F> {
    pub fn holds(&self) -> bool {
        use num_traits::Zero;
        self.at_minus_b.is_zero()
            && self.at_minus_b_over_1u.is_zero()
            && !self.at_b.is_zero()
            && self.non_multiples.is_empty()
            && self.ideal_rows_not_vanishing == 0
    }
}

fn scalar_multiple<F: Field>(x: &AlgebraElement<F>, g: &AlgebraElement<F>) -> Result<bool> {
    let Some((key, c)) = g.terms().next() else {
        return Ok(x.is_zero());
    };
    let ratio = x.coeff(*key).checked_div(c)?;
    Ok(x.checked_sub(&g.scale(&ratio))?.is_zero())
}

/// Evaluates ρ_n on E_1E_2T_{12}, on its left multiples by the basis of E_3
/// and on the whole ideal it generates in E_n.
pub fn factorization_condition<F: Field>(tf: &TraceFunctional<F>, engine: &Engine<F>) -> Result<Factorization<F>> {
    use num_traits::Zero;
    let g = engine.ideal_generator()?;
    let value = evaluate_trace(tf, engine, &g)?;
    let u = engine.u().clone();
    let at_minus_b = value.substitute_a(&-F::one());
    let at_minus_b_over_1u = value.substitute_a(&-(u.clone() + F::one()).checked_inv()?);
    let at_b = value.substitute_a(&F::one());

    let three = Engine::new(3, engine.sqrt_u().clone())?;
    let g3 = three.ideal_generator()?;
    let mut non_multiples = Vec::new();
    for key in three.tables().keys() {
        let z = three.key_element(key);
        if !scalar_multiple(&three.mul(&z, &g3)?, &g3)? {
            non_multiples.push(three.render(&z));
        }
    }

    let ideal = build_ideal(engine)?;
    let rows = ideal.rows();
    let mut ideal_rows_not_vanishing = 0;
    for r in &rows {
        let v = evaluate_trace(tf, engine, r)?;
        let c1 = v.substitute_a(&-F::one());
        let c2 = v.substitute_a(&-(u.clone() + F::one()).checked_inv()?);
        if !c1.is_zero() || !c2.is_zero() {
            ideal_rows_not_vanishing += 1;
        }
    }
    Ok(Factorization {
        value,
        at_minus_b,
        at_minus_b_over_1u,
        at_b,
        non_multiples,
        ideal_rows: rows.len(),
        ideal_rows_not_vanishing,
    })
}

/// One row of the exported table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceEntry {
    /// Restricted growth string of the partition.
    pub partition: String,
    /// One-line notation of the permutation.
    pub permutation: String,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceTable {
    pub n: usize,
    pub exists: bool,
    pub nullity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub symmetry: Symmetry,
    pub redundancy: Vec<RuleRedundancy>,
    pub entries: Vec<TraceEntry>,
}

pub fn trace_table<F: Field>(tf: &TraceFunctional<F>, engine: &Engine<F>) -> TraceTable {
    let tables = engine.tables();
    let entries = if tf.unique() {
        tables
            .keys()
            .map(|key| {
                let el = tables.element(key);
                TraceEntry {
                    partition: el.partition.rgs_string(),
                    permutation: el.perm.to_string(),
                    value: tf.values[tables.key_index(key)].to_string(),
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    TraceTable {
        n: tf.n,
        exists: tf.exists,
        nullity: tf.nullity,
        witness: tf.witness.clone(),
        symmetry: tf.symmetry,
        redundancy: tf.redundancy.clone(),
        entries,
    }
}
