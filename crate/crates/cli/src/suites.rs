use btkit_core::ptl::{self, Context, QuotientReport};
use btkit_core::relations::RelationReport;
use btkit_core::tensor::{self, RankReport, RepresentationReport};
use btkit_core::trace::{self, RuleRedundancy, TraceTable};
use btkit_core::{Engine, Field, Poly2, RationalFunction, Result, SymbolicEngine};
use clap::ValueEnum;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Quotient,
    Rank,
    Trace,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Quotient => "quotient",
            Suite::Rank => "rank",
            Suite::Trace => "trace",
        }
    }

    /// Supported range of n.
    pub fn bounds(self) -> (usize, usize) {
        match self {
            Suite::Relations => (2, 4),
            Suite::Quotient => (3, 5),
            Suite::Rank => (2, 4),
            Suite::Trace => (2, 4),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub n: usize,
    pub check: String,
    pub detail: String,
}

pub fn default_points() -> Vec<BigRational> {
    vec![
        BigRational::new(5.into(), 7.into()),
        BigRational::new(3.into(), 2.into()),
    ]
}

pub fn run(suite: Suite, n: usize, points: &[BigRational], seed: u64) -> Result<(Value, Vec<Failure>)> {
    let (value, failures) = match suite {
        Suite::Relations => relations(n, seed)?,
        Suite::Quotient => quotient(n, points)?,
        Suite::Rank => rank(n, points)?,
        Suite::Trace => trace_suite(n, points, seed)?,
    };
    Ok((value, failures))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn relation_failures(n: usize, report: &RelationReport, out: &mut Vec<Failure>) {
    for c in report.failures() {
        let mut detail = c.statement.clone();
        if let Some(e) = &c.error {
            detail = format!("{detail} ({e})");
        }
        out.push(Failure {
            n,
            check: format!("{}/{}{:?}", report.model, c.id, c.indices),
            detail,
        });
    }
}

#[derive(Serialize)]
struct RelationsResult {
    n: usize,
    engine: RelationReport,
    jimbo: RepresentationReport,
    classical: RelationReport,
}

fn relations(n: usize, seed: u64) -> Result<(Value, Vec<Failure>)> {
    let engine = SymbolicEngine::symbolic(n)?;
    let result = RelationsResult {
        n,
        engine: btkit_core::relations::verify_relations(&engine),
        jimbo: tensor::verify_relations_in_rep(&engine, 100, seed)?,
        classical: tensor::classical_jimbo_check(n, RationalFunction::s())?,
    };
    let mut failures = Vec::new();
    relation_failures(n, &result.engine, &mut failures);
    relation_failures(n, &result.jimbo.relations, &mut failures);
    relation_failures(n, &result.classical, &mut failures);
    for (a, b) in &result.jimbo.homomorphism.failures {
        failures.push(Failure {
            n,
            check: "jimbo/homomorphism".into(),
            detail: format!("J(ab) != J(a)J(b) for a = {a}, b = {b}"),
        });
    }
    Ok((to_value(&result), failures))
}

/// Relations expected to fail in E_n itself: they are equivalent to the
/// quotient relation.
const CUBIC: [&str; 2] = ["fff-cubic", "lll-cubic"];

#[derive(Serialize)]
struct QuotientResult {
    #[serde(flatten)]
    report: QuotientReport,
    /// Quotient dimension equals b_n·C_n and the candidates are independent and spanning.
    conjecture_holds: bool,
}

fn quotient(n: usize, points: &[BigRational]) -> Result<(Value, Vec<Failure>)> {
    let report = if n <= 3 {
        ptl::quotient_report_symbolic(n)?
    } else {
        ptl::quotient_report_at_points(n, points)?
    };
    let mut failures = Vec::new();
    let mut fail = |check: String, detail: String| failures.push(Failure { n, check, detail });
    if !report.points_agree {
        fail("points-agree".into(), "dimensions differ between specializations".into());
    }
    for p in &report.specialization_points {
        for (ok, name) in [
            (p.closure_verified, "ideal-closure"),
            (p.reduce_idempotent, "reduce-idempotent"),
            (p.single_relation_suffices, "single-relation-suffices"),
            (p.mirror_generates_same, "mirror-relation"),
            (p.ideal_in_steinberg_ideal, "ideal-in-steinberg-ideal"),
        ] {
            if !ok {
                fail(format!("{name}@{}", p.point), String::new());
            }
        }
        if !p.spanning.spans {
            fail(
                format!("spanning@{}", p.point),
                format!(
                    "E_I·F candidates have rank {} but the quotient has dimension {}",
                    p.spanning.rank, p.spanning.quotient_dim
                ),
            );
        }
    }
    for c in &report.presentation_checks {
        let expected = match c.context {
            Context::Algebra => !CUBIC.contains(&c.check.id.as_str()),
            Context::Ideal => true,
            Context::SteinbergIdeal => continue,
        };
        if c.check.holds != expected {
            let verb = if expected { "fails" } else { "holds" };
            fail(
                format!("{:?}/{}{:?}", c.context, c.check.id, c.check.indices).to_lowercase(),
                format!("{} {verb}", c.check.statement),
            );
        }
    }
    let conjecture_holds = report.specialization_points.iter().all(|p| {
        p.quotient_dim as u128 == report.conjectured_dim && p.spanning.spans && p.spanning.independent
    });
    Ok((to_value(&QuotientResult { report, conjecture_holds }), failures))
}

#[derive(Serialize)]
struct SampleVector {
    terms: Vec<(String, String)>,
    matches_expected: bool,
}

#[derive(Serialize)]
struct RankResult {
    #[serde(flatten)]
    report: RankReport,
    /// Basis vectors of the full space not killed by J(E_1E_2T_{12}), at the first point.
    generator_witnesses: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sample_vector: Option<SampleVector>,
}

fn rank(n: usize, points: &[BigRational]) -> Result<(Value, Vec<Failure>)> {
    let report = tensor::representation_rank(n, points, n <= 3)?;
    let mut failures = Vec::new();
    let (mut generator_witnesses, mut first_witness) = (0, None);
    if n >= 3 {
        let engine = Engine::new(n, points[0].clone())?;
        let w = tensor::quotient_relation_witnesses(&engine, n)?;
        let space = tensor::TensorSpace::new(n, n, n)?;
        generator_witnesses = w.len();
        first_witness = w.first().map(|&k| space.basis_name(k));
    }
    for s in &report.series {
        if !s.agree {
            failures.push(Failure {
                n,
                check: format!("rank-agreement/lower={}", s.lower),
                detail: "ranks differ between specializations".into(),
            });
        }
        if s.lower == n && !s.kills_ideal_generator {
            failures.push(Failure {
                n,
                check: "jimbo-kills-ideal-generator".into(),
                detail: format!(
                    "J(E_1E_2T_12) is nonzero on {generator_witnesses} basis vectors, e.g. {}",
                    first_witness.clone().unwrap_or_default()
                ),
            });
        }
    }
    let sample_vector = if n == 3 {
        let s = RationalFunction::s();
        let got = tensor::steinberg_on_sample(s.clone())?;
        let matches_expected = got == tensor::steinberg_sample_expected(s);
        if !matches_expected {
            failures.push(Failure {
                n,
                check: "sample-vector".into(),
                detail: "J(T_12) on v1^1⊗v2^1⊗v1^2 differs from the six expected terms".into(),
            });
        }
        let mut terms: Vec<(String, String)> = got
            .iter()
            .map(|(f, c)| {
                let name = f.iter().map(|(i, r)| format!("v{i}^{r}")).collect::<Vec<_>>().join("⊗");
                (name, c.to_string())
            })
            .collect();
        terms.sort();
        Some(SampleVector {
            terms,
            matches_expected,
        })
    } else {
        None
    };
    let result = RankResult {
        report,
        generator_witnesses,
        first_witness,
        sample_vector,
    };
    Ok((to_value(&result), failures))
}

#[derive(Serialize)]
struct FactorizationResult {
    value: String,
    at_a_eq_minus_b: String,
    at_a_eq_minus_b_over_1_plus_u: String,
    at_a_eq_b: String,
    /// Substitutions under which ρ(E_1E_2T_{12}) vanishes.
    vanishes_at: Vec<&'static str>,
    non_multiples: Vec<String>,
    ideal_rows: usize,
    ideal_rows_not_vanishing: usize,
    holds: bool,
}

#[derive(Serialize)]
struct NamedValue {
    element: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<String>,
}

#[derive(Serialize)]
struct TraceResult {
    point: String,
    exists: bool,
    nullity: usize,
    redundancy: Vec<RuleRedundancy>,
    symmetry_random_failures: usize,
    values: Vec<NamedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factorization: Option<FactorizationResult>,
    table: TraceTable,
}

/// A label, an element, and its expected trace over Q(√u) if known.
type Named<F> = (String, btkit_core::AlgebraElement<F>, Option<&'static str>);

fn named_elements<F: Field>(engine: &Engine<F>) -> Result<Vec<Named<F>>> {
    let mut out = vec![("1".to_string(), engine.one(), Some("1"))];
    match engine.n() {
        2 => {
            let (t, e) = (engine.t(1)?, engine.e(1)?);
            out.push(("T_1".into(), t.clone(), Some("A")));
            out.push(("E_1T_1".into(), engine.mul(&e, &t)?, Some("A")));
            out.push(("E_1".into(), e, Some("B")));
        }
        3 => {
            let st = engine.steinberg(1, 2)?;
            let (e1, e2) = (engine.e(1)?, engine.e(2)?);
            let e13 = engine.e_arc(1, 3)?;
            let pair = "(u+1)A^2+(u+1)AB+A+B";
            out.push(("T_12".into(), st.clone(), Some("(u+1)A^2+3A+(u-1)AB+1")));
            out.push((
                "E_1E_2T_12".into(),
                engine.product([&e1, &e2, &st])?,
                Some("(u+1)A^2+(u+2)AB+B^2"),
            ));
            out.push(("E_1T_12".into(), engine.mul(&e1, &st)?, Some(pair)));
            out.push(("E_2T_12".into(), engine.mul(&e2, &st)?, Some(pair)));
            out.push(("E_13T_12".into(), engine.mul(&e13, &st)?, Some(pair)));
            out.push((
                "E_1T_1T_2T_1".into(),
                engine.product([&e1, &engine.t(1)?, &engine.t(2)?, &engine.t(1)?])?,
                Some("uAB+(u-1)A^2"),
            ));
        }
        _ => {}
    }
    Ok(out)
}

fn trace_at<F: Field>(
    n: usize,
    sqrt_u: F,
    point: String,
    seed: u64,
    expected: impl Fn(&str) -> Option<Poly2<F>>,
    failures: &mut Vec<Failure>,
) -> Result<TraceResult> {
    let (engine, tf) = trace::solve_trace(n, sqrt_u)?;
    let mut fail = |check: String, detail: String| failures.push(Failure { n, check, detail });
    if !tf.exists {
        fail(format!("trace-exists@{point}"), tf.witness.clone().unwrap_or_default());
    }
    if tf.nullity > 0 {
        fail(format!("trace-unique@{point}"), format!("nullity {}", tf.nullity));
    }
    let mut values = Vec::new();
    let mut symmetry_random_failures = 0;
    let mut factorization = None;
    if tf.unique() {
        for (label, el, exp) in named_elements(&engine)? {
            let v = trace::evaluate_trace(&tf, &engine, &el)?;
            let exp = exp.and_then(&expected);
            if let Some(e) = &exp {
                if *e != v {
                    fail(format!("trace-value@{point}"), format!("ρ({label}) = {v}, expected {e}"));
                }
            }
            values.push(NamedValue {
                element: label,
                value: v.to_string(),
                expected: exp.map(|e| e.to_string()),
            });
        }
        symmetry_random_failures = trace::check_symmetry_random(&tf, &engine, 100, seed)?;
        if symmetry_random_failures > 0 {
            fail(
                format!("trace-symmetry@{point}"),
                format!("{symmetry_random_failures} random pairs with ρ(ab) != ρ(ba)"),
            );
        }
        if n >= 3 {
            let f = trace::factorization_condition(&tf, &engine)?;
            if !f.holds() {
                fail(format!("factorization@{point}"), format!("ρ(E_1E_2T_12) = {}", f.value));
            }
            let mut vanishes_at = Vec::new();
            if num_traits::Zero::is_zero(&f.at_minus_b) {
                vanishes_at.push("A = -B");
            }
            if num_traits::Zero::is_zero(&f.at_minus_b_over_1u) {
                vanishes_at.push("A = -B/(1+u)");
            }
            factorization = Some(FactorizationResult {
                vanishes_at,
                value: f.value.to_string(),
                at_a_eq_minus_b: f.at_minus_b.to_string(),
                at_a_eq_minus_b_over_1_plus_u: f.at_minus_b_over_1u.to_string(),
                at_a_eq_b: f.at_b.to_string(),
                holds: f.holds(),
                non_multiples: f.non_multiples,
                ideal_rows: f.ideal_rows,
                ideal_rows_not_vanishing: f.ideal_rows_not_vanishing,
            });
        }
    }
    Ok(TraceResult {
        point,
        exists: tf.exists,
        nullity: tf.nullity,
        redundancy: tf.redundancy.clone(),
        symmetry_random_failures,
        values,
        factorization,
        table: trace::trace_table(&tf, &engine),
    })
}

#[derive(Serialize)]
struct TraceSuiteResult {
    n: usize,
    runs: Vec<TraceResult>,
}

fn trace_suite(n: usize, points: &[BigRational], seed: u64) -> Result<(Value, Vec<Failure>)> {
    let mut failures = Vec::new();
    let mut runs = Vec::new();
    if n <= 3 {
        let parse = |text: &str| text.parse::<Poly2<RationalFunction>>().ok();
        runs.push(trace_at(n, RationalFunction::s(), "symbolic".into(), seed, parse, &mut failures)?);
    } else {
        for p in points {
            let parse = |text: &str| {
                let poly = text.parse::<Poly2<RationalFunction>>().ok()?;
                poly.try_map(|c| c.evaluate(p)).ok()
            };
            runs.push(trace_at(n, p.clone(), p.to_string(), seed, parse, &mut failures)?);
        }
    }
    Ok((to_value(&TraceSuiteResult { n, runs }), failures))
}
