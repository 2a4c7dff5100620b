//! Structure of E_n: dimension, associativity, specialization, and the
//! homomorphism into End(V^{⊗n}).

use btkit_core::algebra::{AlgebraElement, BasisKey, Engine};
use btkit_core::partition::bell;
use btkit_core::permutation::{factorial, Permutation};
use btkit_core::scalar::{Field, Fp, RationalFunction};
use btkit_core::tensor::{self, JimboModel};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Rf = RationalFunction;

fn random_element<F: Field>(engine: &Engine<F>, rng: &mut ChaCha8Rng, terms: usize) -> AlgebraElement<F> {
    let keys: Vec<BasisKey> = engine.tables().keys().collect();
    AlgebraElement::from_terms(
        engine.n(),
        (0..terms).map(|_| (keys[rng.gen_range(0..keys.len())], F::from_i64(rng.gen_range(-3..=3)))),
    )
}

#[test]
fn dimension_is_bell_times_factorial() {
    for n in 1..=5 {
        let engine = Engine::new(n, Fp::new(5)).unwrap();
        assert_eq!(engine.dim() as u128, bell(n) * factorial(n));
    }
}

#[test]
fn associativity_over_fp_at_n5() {
    let engine = Engine::new(5, Fp::new(1234567)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let (a, b, c) = (
            random_element(&engine, &mut rng, 2),
            random_element(&engine, &mut rng, 2),
            random_element(&engine, &mut rng, 2),
        );
        let left = engine.mul(&engine.mul(&a, &b).unwrap(), &c).unwrap();
        let right = engine.mul(&a, &engine.mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn unit_and_generators() {
    let engine = Engine::<Rf>::symbolic(4).unwrap();
    let one = engine.one();
    let u = engine.scalar(Rf::u());
    for i in 1..=3 {
        let (t, e) = (engine.t(i).unwrap(), engine.e(i).unwrap());
        assert_eq!(engine.mul(&one, &t).unwrap(), t);
        assert_eq!(engine.mul(&t, &engine.t_inv(i).unwrap()).unwrap(), one);
        assert_eq!(engine.mul(&e, &e).unwrap(), e);
        // T_i^2 = 1 + (u - 1) E_i + (u - 1) E_i T_i
        let rhs = one
            .checked_add(&engine.mul(&u.checked_sub(&one).unwrap(), &e.checked_add(&engine.mul(&e, &t).unwrap()).unwrap()).unwrap())
            .unwrap();
        assert_eq!(engine.mul(&t, &t).unwrap(), rhs);
    }
}

#[test]
fn t_perm_is_a_product_of_generators() {
    let engine = Engine::<Rf>::symbolic(4).unwrap();
    for w in Permutation::enumerate(4) {
        let gens: Vec<_> = w.reduced_word().iter().map(|&i| engine.t(i).unwrap()).collect();
        assert_eq!(engine.product(gens.iter()).unwrap(), engine.t_perm(&w).unwrap());
    }
}

#[test]
fn specialization_commutes_with_multiplication() {
    let engine = Engine::<Rf>::symbolic(3).unwrap();
    let s = BigRational::new(5.into(), 7.into());
    let special = Engine::new(3, s.clone()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let (a, b) = (random_element(&engine, &mut rng, 3), random_element(&engine, &mut rng, 3));
        let symbolic = engine.mul(&a, &b).unwrap().specialize(&s).unwrap();
        let direct = special.mul(&a.specialize(&s).unwrap(), &b.specialize(&s).unwrap()).unwrap();
        assert_eq!(symbolic, direct);
    }
}

#[test]
fn embedding_is_multiplicative() {
    let small = Engine::<Rf>::symbolic(3).unwrap();
    let big = Engine::<Rf>::symbolic(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let (a, b) = (random_element(&small, &mut rng, 2), random_element(&small, &mut rng, 2));
        let ab = big.embed_from(&small, &small.mul(&a, &b).unwrap()).unwrap();
        let prod = big
            .mul(&big.embed_from(&small, &a).unwrap(), &big.embed_from(&small, &b).unwrap())
            .unwrap();
        assert_eq!(ab, prod);
    }
}

#[test]
fn render_parse_round_trip() {
    let engine = Engine::<Rf>::symbolic(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..30 {
        let a = random_element(&engine, &mut rng, 4);
        assert_eq!(engine.parse(&engine.render(&a)).unwrap(), a);
    }
}

#[test]
fn representation_is_a_homomorphism() {
    for n in [2, 3] {
        let engine = Engine::<Rf>::symbolic(n).unwrap();
        let model = JimboModel::braids_and_ties(n, Rf::s()).unwrap();
        let h = tensor::check_homomorphism(&engine, &model, 150, 3).unwrap();
        assert_eq!(h.pairs, 150);
        assert!(h.failures.is_empty(), "{:?}", h.failures);
    }
}
