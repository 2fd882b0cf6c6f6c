use daha_core::params::{make_params, probably_equal, Mode, Params, DEFAULT_GENERICITY_BOUND};
use daha_core::poly::Monomial;
use daha_core::{Error, Poly, RatFunc, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(([0u16..=2, 0u16..=2, 0u16..=1, 0u16..=1, 0u16..=1], -3i64..=3), 1..=4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, c)| (Monomial(e), BigInt::from(c)))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly().prop_filter("nonzero denominator", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::from_parts(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in ratfunc()) {
        let c = x.canonicalize();
        prop_assert_eq!(&c, &x);
        prop_assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn probabilistic_equality_agrees_with_exact(x in ratfunc(), y in ratfunc(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (sx, sy) = (Scalar::from(x.clone()), Scalar::from(y.clone()));
        prop_assert_eq!(probably_equal(&sx, &sy, 8, &mut rng), x == y);
        // A rewritten form of the same value.
        if !y.is_zero() {
            let same = Scalar::from(x.mul(&y).div(&y).unwrap());
            prop_assert!(probably_equal(&sx, &same, 8, &mut rng));
        }
    }
}

#[test]
fn square_root_symbol_squares_to_u() {
    let p = Params::symbolic().with_extension();
    let s = p.sqrt().unwrap();
    assert!(s.mul(s).sub(&p.values().u()).is_zero());
}

#[test]
fn make_params_contract() {
    let sym = make_params(Mode::Symbolic, None, DEFAULT_GENERICITY_BOUND).unwrap();
    assert_eq!(sym.mode(), Mode::Symbolic);
    let point = |q: (i64, i64)| {
        let mut m = BTreeMap::new();
        let r = |(n, d): (i64, i64)| BigRational::new(n.into(), d.into());
        m.insert("q".to_string(), r(q));
        for (k, v) in [("a", (2, 1)), ("b", (1, 3)), ("c", (5, 1)), ("d", (7, 1))] {
            m.insert(k.to_string(), r(v));
        }
        m
    };
    assert!(make_params(Mode::Specialized, Some(&point((3, 2))), 16).is_ok());
    let mut q1 = point((1, 1));
    for k in ["a", "b", "c", "d"] {
        q1.insert(k.to_string(), BigRational::from_integer(2.into()));
    }
    assert_eq!(
        make_params(Mode::Specialized, Some(&q1), 16).unwrap_err(),
        Error::DegenerateParameters { clause: "q^m != 1".into(), m: 1 }
    );
    let mut missing = point((3, 2));
    missing.remove("c");
    assert_eq!(make_params(Mode::Specialized, Some(&missing), 16).unwrap_err(), Error::MissingAssignment("c".into()));
    assert_eq!(make_params(Mode::Symbolic, Some(&point((3, 2))), 16).unwrap_err(), Error::UnexpectedAssignment);
}

#[test]
fn c0_at_q_two() {
    let p = Params::specialized([(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)]).unwrap();
    assert_eq!(p.values().structure_constants().c0, Scalar::rational(&BigRational::new(9.into(), 4.into())));
}
