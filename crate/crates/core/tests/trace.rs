//! The Markov trace: the defining properties checked on the solved values,
//! plus agreement between symbolic and specialized solutions.

use btkit_core::algebra::{AlgebraElement, BasisKey, Engine};
use btkit_core::scalar::{Field, Poly2, RationalFunction};
use btkit_core::trace::{self, Symmetry};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Rf = RationalFunction;

fn p(text: &str) -> Poly2<Rf> {
    text.parse().unwrap()
}

fn random_element<F: Field>(engine: &Engine<F>, rng: &mut ChaCha8Rng) -> AlgebraElement<F> {
    let keys: Vec<BasisKey> = engine.tables().keys().collect();
    AlgebraElement::from_terms(
        engine.n(),
        (0..3).map(|_| (keys[rng.gen_range(0..keys.len())], F::from_i64(rng.gen_range(-3..=3)))),
    )
}

#[test]
fn low_level_values() {
    let (engine, tf) = trace::solve_trace(2, Rf::s()).unwrap();
    let ev = |a: &AlgebraElement<Rf>| trace::evaluate_trace(&tf, &engine, a).unwrap();
    assert_eq!(ev(&engine.one()), p("1"));
    assert_eq!(ev(&engine.t(1).unwrap()), p("A"));
    assert_eq!(ev(&engine.e(1).unwrap()), p("B"));
    let t = engine.t(1).unwrap();
    assert_eq!(ev(&engine.mul(&t, &t).unwrap()), p("1+(u-1)A+(u-1)B"));
}

#[test]
fn markov_rules_hold_on_every_basis_element() {
    let tower = trace::solve_trace_tower(3, Rf::s(), Symmetry::AllPairs).unwrap();
    let (small, tf2) = &tower[1];
    let (big, tf3) = &tower[2];
    let (a, b) = (Poly2::a(), Poly2::b());
    let (t, e) = (big.t(2).unwrap(), big.e(2).unwrap());
    let et = big.mul(&e, &t).unwrap();
    for key in small.tables().keys() {
        let x = big.embed_from(small, &small.key_element(key)).unwrap();
        let rho = trace::evaluate_trace(tf2, small, &small.key_element(key)).unwrap();
        let at = |y: &AlgebraElement<Rf>| trace::evaluate_trace(tf3, big, &big.mul(&x, y).unwrap()).unwrap();
        assert_eq!(trace::evaluate_trace(tf3, big, &x).unwrap(), rho);
        assert_eq!(at(&t), rho.clone() * a.clone());
        assert_eq!(at(&e), rho.clone() * b.clone());
        assert_eq!(at(&et), rho * a.clone());
    }
}

#[test]
fn trace_property_on_random_products() {
    let (engine, tf) = trace::solve_trace(3, Rf::s()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..60 {
        let (x, y) = (random_element(&engine, &mut rng), random_element(&engine, &mut rng));
        let xy = trace::evaluate_trace(&tf, &engine, &engine.mul(&x, &y).unwrap()).unwrap();
        let yx = trace::evaluate_trace(&tf, &engine, &engine.mul(&y, &x).unwrap()).unwrap();
        assert_eq!(xy, yx);
    }
}

#[test]
fn generator_symmetry_gives_a_full_trace_at_n4() {
    let s = BigRational::new(5.into(), 7.into());
    let (engine, tf) = trace::solve_trace(4, s).unwrap();
    assert!(tf.unique());
    assert_eq!(trace::check_symmetry_random(&tf, &engine, 100, 7).unwrap(), 0);
    let f = trace::factorization_condition(&tf, &engine).unwrap();
    assert!(f.holds());
    assert_eq!(f.ideal_rows_not_vanishing, 0);
    assert_eq!(f.ideal_rows, 26);
}

#[test]
fn specialization_of_the_symbolic_trace() {
    let s = BigRational::new(3.into(), 2.into());
    let (sym_engine, sym) = trace::solve_trace(3, Rf::s()).unwrap();
    let (engine, num) = trace::solve_trace(3, s.clone()).unwrap();
    for key in engine.tables().keys() {
        let expected = sym
            .value(&sym_engine, key)
            .unwrap()
            .try_map(|c| c.evaluate(&s))
            .unwrap();
        assert_eq!(num.value(&engine, key).unwrap(), &expected);
    }
}

#[test]
fn trace_table_lists_every_basis_element() {
    let (engine, tf) = trace::solve_trace(3, Rf::s()).unwrap();
    let table = trace::trace_table(&tf, &engine);
    assert_eq!(table.entries.len(), 30);
    assert!(table.exists);
    assert_eq!(table.nullity, 0);
}
