//! Acceptance criteria 1-9, one line each.
//!
//! Three criteria cannot pass because the claims behind them are false for
//! the algebra as defined (see the README). For those the run still checks
//! that the failure is exactly the documented one, so the target only fails
//! on an unexpected outcome.

use std::process::ExitCode;
use std::time::Instant;

use btkit_core::algebra::{AlgebraElement, BasisKey, Engine};
use btkit_core::partition::SetPartition;
use btkit_core::permutation::Permutation;
use btkit_core::ptl::{self, Context};
use btkit_core::relations::{verify_relations, Family};
use btkit_core::scalar::{Field, Poly2, RationalFunction};
use btkit_core::tensor::{self, JimboModel};
use btkit_core::trace;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Rf = RationalFunction;

struct Outcome {
    pass: bool,
    summary: String,
    /// For criteria known to fail: whether the failure is the documented one.
    as_documented: bool,
}

impl Outcome {
    fn plain(pass: bool, summary: String) -> Self {
        Outcome {
            pass,
            summary,
            as_documented: pass,
        }
    }
}

const KNOWN_FAILING: [usize; 3] = [3, 5, 7];

fn points() -> [BigRational; 2] {
    [BigRational::new(5.into(), 7.into()), BigRational::new(3.into(), 2.into())]
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [3, 4] {
        let engine = Engine::<Rf>::symbolic(n).unwrap();
        let report = verify_relations(&engine);
        let defining: Vec<_> = report.family(Family::Defining).collect();
        let engine_ok = !defining.is_empty() && defining.iter().all(|c| c.holds);
        let rep = tensor::verify_relations_in_rep(&engine, 0, 0).unwrap();
        let rep_ok = !rep.relations.checks.is_empty() && rep.relations.all_hold();
        ok &= engine_ok && rep_ok;
        parts.push(format!(
            "n={n}: {} instances in E_n {}, {} in J_n {}",
            defining.len(),
            if engine_ok { "hold" } else { "FAIL" },
            rep.relations.checks.len(),
            if rep_ok { "hold" } else { "FAIL" }
        ));
    }
    Outcome::plain(ok, parts.join("; "))
}

fn criterion_2() -> Outcome {
    let families = [Family::Gamma, Family::Idempotent, Family::Exchange, Family::SteinbergAbsorb];
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [3, 4] {
        let report = verify_relations(&Engine::<Rf>::symbolic(n).unwrap());
        let checks: Vec<_> = report.checks.iter().filter(|c| families.contains(&c.family)).collect();
        let held = checks.iter().filter(|c| c.holds).count();
        ok &= held == checks.len() && !checks.is_empty();
        parts.push(format!("n={n}: {held}/{} derived identities hold", checks.len()));
    }
    Outcome::plain(ok, parts.join("; "))
}

fn criterion_3() -> Outcome {
    let s = Rf::s();
    let sample_ok = tensor::steinberg_on_sample(s.clone()).unwrap() == tensor::steinberg_sample_expected(s.clone());
    let engine = Engine::<Rf>::symbolic(3).unwrap();
    let full = tensor::quotient_relation_witnesses(&engine, 3).unwrap();
    let two = tensor::quotient_relation_witnesses(&engine, 2).unwrap();
    let space = tensor::TensorSpace::new(3, 3, 3).unwrap();
    let example = full.first().map(|&k| space.basis_name(k)).unwrap_or_default();
    Outcome {
        pass: sample_ok && full.is_empty(),
        summary: format!(
            "six-term vector {}; J_3(E_1E_2T_12) on dim V = 9 is nonzero on {} basis vectors (e.g. {example}); \
             zero when lower indices are restricted to {{1,2}}: {}",
            if sample_ok { "reproduced" } else { "MISMATCH" },
            full.len(),
            two.is_empty()
        ),
        as_documented: sample_ok && full.len() == 18 && two.is_empty(),
    }
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut count = 0;
    for n in [3, 4] {
        let r = tensor::classical_jimbo_check(n, Rf::s()).unwrap();
        ok &= r.all_hold();
        count += r.checks.len();
    }
    Outcome::plain(ok, format!("{count} classical checks (h_ij = 0, F-gate, TL relations) at n = 3, 4"))
}

fn criterion_5() -> Outcome {
    let report = ptl::quotient_report_symbolic(3).unwrap();
    let cubic = |id: &str| id == "fff-cubic" || id == "lll-cubic";
    let in_context = |ctx| report.presentation_checks.iter().filter(move |c| c.context == ctx);
    let algebra_ok = in_context(Context::Algebra).all(|c| c.check.holds != cubic(&c.check.id));
    let ideal_non_cubic = in_context(Context::Ideal).filter(|c| !cubic(&c.check.id)).all(|c| c.check.holds);
    let ideal_cubic: Vec<_> = in_context(Context::Ideal).filter(|c| cubic(&c.check.id)).collect();
    let cubic_held = ideal_cubic.iter().filter(|c| c.check.holds).count();
    let steinberg_all = in_context(Context::SteinbergIdeal).all(|c| c.check.holds);
    Outcome {
        pass: algebra_ok && ideal_non_cubic && cubic_held == ideal_cubic.len(),
        summary: format!(
            "in E_3 the non-cubic F and L relations hold and the cubic ones fail: {}; modulo <E_1E_2T_12>: {cubic_held}/{} cubic instances hold; \
             modulo <T_12> every relation holds: {steinberg_all}",
            if algebra_ok { "as stated" } else { "NOT as stated" },
            ideal_cubic.len()
        ),
        as_documented: algebra_ok && ideal_non_cubic && cubic_held == 0 && steinberg_all,
    }
}

fn criterion_6() -> Outcome {
    let r3 = ptl::quotient_report_symbolic(3).unwrap();
    let p3 = &r3.specialization_points[0];
    let mut ok = p3.closure_verified && p3.reduce_idempotent;
    let mut dims4 = Vec::new();
    for p in points() {
        let engine = Engine::new(4, p.clone()).unwrap();
        let ib = ptl::build_ideal(&engine).unwrap();
        ok &= ptl::verify_closure(&engine, &ib).unwrap();
        for key in engine.tables().keys() {
            let r = ib.reduce(&engine.key_element(key)).unwrap();
            ok &= ib.reduce(&r).unwrap() == r;
        }
        dims4.push(ib.quotient_dim(&engine));
    }
    ok &= dims4[0] == dims4[1];
    Outcome::plain(
        ok,
        format!(
            "dim PTL_3 = {} (b_3C_3 = 25), dim PTL_4 = {} at both points (b_4C_4 = 210); conjecture {}; closure and idempotence {}",
            r3.quotient_dim,
            dims4[0],
            if r3.quotient_dim == 25 && dims4[0] == 210 { "confirmed" } else { "not confirmed" },
            if ok { "verified" } else { "FAILED" }
        ),
    )
}

fn criterion_7() -> Outcome {
    let engine = Engine::<Rf>::symbolic(3).unwrap();
    let ib = ptl::build_ideal(&engine).unwrap();
    let s = ptl::spanning_check(&engine, &ib).unwrap();
    let sb = ptl::build_steinberg_ideal(&engine).unwrap();
    let st = ptl::spanning_check(&engine, &sb).unwrap();
    Outcome {
        pass: s.spans,
        summary: format!(
            "{} candidates E_I·F have rank {} modulo <E_1E_2T_12>, quotient dimension {}; modulo <T_12> rank {} = dimension {}",
            s.candidates, s.rank, s.quotient_dim, st.rank, st.quotient_dim
        ),
        as_documented: s.candidates == 25
            && s.rank == 25
            && s.quotient_dim == 29
            && s.all_nonzero
            && st.spans
            && st.quotient_dim == 19,
    }
}

fn criterion_8() -> Outcome {
    let p = |t: &str| t.parse::<Poly2<Rf>>().unwrap();
    let tower = trace::solve_trace_tower(3, Rf::s(), trace::Symmetry::AllPairs).unwrap();
    let mut ok = tower.iter().all(|(_, tf)| tf.unique());
    let (engine, tf) = &tower[2];
    let ev = |a: &AlgebraElement<Rf>| trace::evaluate_trace(tf, engine, a).unwrap();
    let st = engine.steinberg(1, 2).unwrap();
    let (e1, e2) = (engine.e(1).unwrap(), engine.e(2).unwrap());
    let pair = p("(u+1)A^2+(u+1)AB+A+B");
    let g = engine.ideal_generator().unwrap();
    ok &= ev(&st) == p("(u+1)A^2+3A+(u-1)AB+1");
    ok &= ev(&g) == p("(u+1)A^2+(u+2)AB+B^2");
    for e in [e1.clone(), e2.clone(), engine.e_arc(1, 3).unwrap()] {
        ok &= ev(&engine.mul(&e, &st).unwrap()) == pair;
    }
    let example = engine
        .product([&e1, &engine.t(1).unwrap(), &engine.t(2).unwrap(), &engine.t(1).unwrap()])
        .unwrap();
    ok &= ev(&example) == p("uAB+(u-1)A^2");
    let f = trace::factorization_condition(tf, engine).unwrap();
    ok &= f.holds();
    ok &= trace::check_symmetry_random(tf, engine, 100, 3).unwrap() == 0;
    Outcome::plain(
        ok,
        format!(
            "rho_2, rho_3 exist and are unique; rho_3(E_1E_2T_12) = {}; zero at A = -B and A = -B/(1+u), {} at A = B; \
             z·g a multiple of g for {} of 30 basis elements",
            f.value,
            f.at_b,
            30 - f.non_multiples.len()
        ),
    )
}

fn random_element<F: Field>(engine: &Engine<F>, rng: &mut ChaCha8Rng, terms: usize) -> AlgebraElement<F> {
    let keys: Vec<BasisKey> = engine.tables().keys().collect();
    AlgebraElement::from_terms(
        engine.n(),
        (0..terms).map(|_| (keys[rng.gen_range(0..keys.len())], F::from_i64(rng.gen_range(-4..=4)))),
    )
}

/// Applies random commutation and braid moves to a word.
fn braid_shuffle(word: &[usize], rng: &mut ChaCha8Rng, steps: usize) -> Vec<usize> {
    let mut w = word.to_vec();
    for _ in 0..steps {
        if w.len() < 2 {
            break;
        }
        let k = rng.gen_range(0..w.len() - 1);
        if w[k].abs_diff(w[k + 1]) > 1 {
            w.swap(k, k + 1);
        } else if k + 2 < w.len() && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
            let (a, b) = (w[k], w[k + 1]);
            w[k..k + 3].copy_from_slice(&[b, a, b]);
        }
    }
    w
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut ok = true;
    let mut notes = Vec::new();

    for n in [3, 4] {
        let engine = Engine::<Rf>::symbolic(n).unwrap();
        let mut bad = 0;
        for _ in 0..200 {
            let (a, b, c) = (
                random_element(&engine, &mut rng, 3),
                random_element(&engine, &mut rng, 3),
                random_element(&engine, &mut rng, 3),
            );
            let left = engine.mul(&engine.mul(&a, &b).unwrap(), &c).unwrap();
            let right = engine.mul(&a, &engine.mul(&b, &c).unwrap()).unwrap();
            bad += usize::from(left != right);
        }
        ok &= bad == 0;
        notes.push(format!("assoc n={n}: {bad}/200 failures"));
    }

    let mut moves = 0;
    for n in 2..=4 {
        let engine = Engine::<Rf>::symbolic(n).unwrap();
        for w in Permutation::enumerate(n) {
            let word = w.reduced_word();
            let direct = engine.t_perm(&w).unwrap();
            for _ in 0..5 {
                let other = braid_shuffle(&word, &mut rng, 20);
                ok &= Permutation::from_word(&other, n).unwrap() == w;
                ok &= engine.t_word(&other).unwrap() == direct;
                moves += 1;
            }
        }
    }
    notes.push(format!("Matsumoto: {moves} rewritten words"));

    for n in [3, 4] {
        let engine = Engine::<Rf>::symbolic(n).unwrap();
        let model = JimboModel::braids_and_ties(n, Rf::s()).unwrap();
        let h = tensor::check_homomorphism(&engine, &model, 100, 11).unwrap();
        ok &= h.failures.is_empty() && h.pairs == 100;
        notes.push(format!("J homomorphism n={n}: {} failures in 100 pairs", h.failures.len()));
    }

    let mut laws = 0;
    for n in 1..=4 {
        let parts = SetPartition::enumerate(n);
        let (unit, full) = (SetPartition::unit(n), SetPartition::full(n));
        for a in &parts {
            ok &= a.join(a).unwrap() == *a;
            ok &= a.join(&unit).unwrap() == *a && a.join(&full).unwrap() == full;
            for b in &parts {
                let ab = a.join(b).unwrap();
                ok &= ab == b.join(a).unwrap();
                ok &= a.leq(&ab).unwrap() && b.leq(&ab).unwrap();
                for c in &parts {
                    ok &= ab.join(c).unwrap() == a.join(&b.join(c).unwrap()).unwrap();
                    laws += 1;
                }
                for w in Permutation::enumerate(n) {
                    ok &= ab.permuted(&w).unwrap() == a.permuted(&w).unwrap().join(&b.permuted(&w).unwrap()).unwrap();
                }
            }
        }
    }
    notes.push(format!("partition laws: {laws} triples"));
    Outcome::plain(ok, notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (k, f) in criteria {
        let start = Instant::now();
        let o = f();
        println!(
            "criterion {k}: {} ({:.1}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.summary
        );
        let expected_pass = !KNOWN_FAILING.contains(&k);
        if o.pass != expected_pass || !o.as_documented && !o.pass {
            unexpected.push(k);
        }
    }
    if unexpected.is_empty() {
        println!("all outcomes as documented; failing criteria: {KNOWN_FAILING:?}");
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
