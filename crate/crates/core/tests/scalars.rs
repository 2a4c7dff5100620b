//! Field arithmetic against independent oracles: evaluation at rational
//! points for Q(s), and u128 modular arithmetic for F_p.

use btkit_core::scalar::{Field, Fp, IntPoly, Poly2, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

const P: u128 = (1 << 61) - 1;

fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn rf(num: &[i64], den: &[i64]) -> Option<RationalFunction> {
    RationalFunction::new(poly(num), poly(den)).ok()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 0..4)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn eval(f: &RationalFunction, s: &BigRational) -> Option<BigRational> {
    f.evaluate(s).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn q_of_s_operations_commute_with_evaluation(
        an in coeffs(), ad in coeffs(), bn in coeffs(), bd in coeffs(),
        sn in -9i64..=9, sd in 1i64..=9,
    ) {
        let (Some(a), Some(b)) = (rf(&an, &ad), rf(&bn, &bd)) else { return Ok(()) };
        let s = q(sn, sd);
        let (Some(x), Some(y)) = (eval(&a, &s), eval(&b, &s)) else { return Ok(()) };
        if let Some(v) = eval(&(a.clone() + b.clone()), &s) { prop_assert_eq!(v, &x + &y); }
        if let Some(v) = eval(&(a.clone() - b.clone()), &s) { prop_assert_eq!(v, &x - &y); }
        if let Some(v) = eval(&(a.clone() * b.clone()), &s) { prop_assert_eq!(v, &x * &y); }
        if !y.is_zero() {
            if let Ok(quot) = a.checked_div(&b) {
                if let Some(v) = eval(&quot, &s) { prop_assert_eq!(v, &x / &y); }
            }
        }
    }

    #[test]
    fn q_of_s_field_axioms(
        an in coeffs(), ad in coeffs(), bn in coeffs(), bd in coeffs(), cn in coeffs(), cd in coeffs(),
    ) {
        let (Some(a), Some(b), Some(c)) = (rf(&an, &ad), rf(&bn, &bd), rf(&cn, &cd)) else { return Ok(()) };
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.checked_inv().unwrap()).is_one());
        } else {
            prop_assert!(a.checked_inv().is_err());
        }
    }

    #[test]
    fn canonical_form_is_unique(an in coeffs(), ad in coeffs(), k in prop::collection::vec(-3i64..=3, 1..3)) {
        // a/b and (a k)/(b k) must compare and print equal.
        let Some(a) = rf(&an, &ad) else { return Ok(()) };
        let kp = poly(&k);
        if kp.is_zero() { return Ok(()) }
        let b = RationalFunction::new(poly(&an).mul(&kp), poly(&ad).mul(&kp)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(a.to_string().parse::<RationalFunction>().unwrap(), a);
    }

    #[test]
    fn fp_matches_u128_arithmetic(x in 0u64..(1 << 61) - 1, y in 0u64..(1 << 61) - 1) {
        let (a, b) = (Fp::new(x), Fp::new(y));
        prop_assert_eq!((a + b).value() as u128, (x as u128 + y as u128) % P);
        prop_assert_eq!((a * b).value() as u128, (x as u128 * y as u128) % P);
        prop_assert_eq!((a - b).value() as u128, (x as u128 + P - y as u128) % P);
        if x != 0 {
            prop_assert_eq!((a * a.checked_inv().unwrap()).value(), 1);
        }
    }

    #[test]
    fn fp_agrees_with_rationals(n in -1000i64..1000, d in 1i64..1000) {
        let r = q(n, d);
        let via = Fp::from_rational(&r).unwrap();
        prop_assert_eq!(via * Fp::from_i64(d), Fp::from_i64(n));
    }
}

#[test]
fn fp_fermat() {
    let a = Fp::new(123_456_789);
    assert_eq!(a.pow_u64(P as u64 - 1), Fp::one());
    assert!(Fp::zero().checked_inv().is_err());
}

#[test]
fn s_squared_is_u() {
    let s = RationalFunction::s();
    assert_eq!(s.clone() * s, RationalFunction::u());
    assert_eq!(RationalFunction::u().to_string(), "u");
    assert_eq!(eval(&RationalFunction::u(), &q(3, 2)), Some(q(9, 4)));
}

#[test]
fn poly2_parse_display_round_trip() {
    for text in ["(u+1)A^2+(u+2)AB+B^2", "uAB+(u-1)A^2", "1", "0"] {
        let p: Poly2<RationalFunction> = text.parse().unwrap();
        assert_eq!(p.to_string().parse::<Poly2<RationalFunction>>().unwrap(), p);
    }
    let p: Poly2<RationalFunction> = "(u+1)A^2+(u+2)AB+B^2".parse().unwrap();
    // (A + B)((u+1)A + B)
    let a = RationalFunction::from_integer(2.into());
    let b = RationalFunction::from_integer((-2).into());
    assert!(p.evaluate(&a, &b).is_zero());
    let v = p.evaluate_at(&q(1, 2), &q(1, 1), &q(1, 1)).unwrap();
    // u = 1/4: 5/4 + 9/4 + 1
    assert_eq!(v, q(9, 2));
}
