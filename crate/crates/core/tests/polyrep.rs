use daha_core::params::ParamValues;
use daha_core::poly::NVARS;
use daha_core::polyrep::{qpochhammer, BasicRep, LaurentPoly, Op, RepConstants};
use daha_core::{RatFunc, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::sync::OnceLock;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn point() -> [BigRational; NVARS] {
    [rat(2, 7), rat(3, 5), rat(-4, 3), rat(5, 2), rat(7, 11)]
}

fn symbolic() -> &'static BasicRep {
    static R: OnceLock<BasicRep> = OnceLock::new();
    R.get_or_init(|| BasicRep::new(&ParamValues::symbolic()))
}

fn special() -> &'static BasicRep {
    static R: OnceLock<BasicRep> = OnceLock::new();
    R.get_or_init(|| BasicRep::new(&ParamValues::at_point(&point())))
}

fn value(x: &RatFunc) -> BigRational {
    x.as_rational().expect("specialized coefficient")
}

fn eval_at(f: &LaurentPoly, z: &BigRational) -> BigRational {
    f.coeffs().iter().fold(BigRational::zero(), |acc, (&k, c)| acc + value(c) * pow(z, k))
}

fn pow(z: &BigRational, k: i32) -> BigRational {
    let p = num_traits::pow(z.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// The q-difference operator evaluated pointwise at a rational `z`, straight
/// from its defining formula.
fn dsym_pointwise(f: &LaurentPoly, p: &[BigRational; NVARS], z: &BigRational) -> BigRational {
    let one = BigRational::one();
    let [q, a, b, c, d] = p.clone();
    let params = [&a, &b, &c, &d];
    let zi = z.recip();
    let fz = eval_at(f, z);
    let up: BigRational = params.iter().map(|&x| &one - x * z).product();
    let down: BigRational = params.iter().map(|&x| &one - x * &zi).product();
    let z2 = z * z;
    let zi2 = &zi * &zi;
    let plus = up / ((&one - &z2) * (&one - &q * &z2)) * (eval_at(f, &(&q * z)) - &fz);
    let minus = down / ((&one - &zi2) * (&one - &q * &zi2)) * (eval_at(f, &(z / &q)) - &fz);
    (&one + &a * &b * &c * &d / &q) * &fz + plus + minus
}

#[test]
fn dsym_matches_pointwise_formula() {
    let p = point();
    let zs = [rat(3, 2), rat(-5, 7), rat(11, 3)];
    for k in 0..=5 {
        let f = LaurentPoly::sym_monomial(k).add(&LaurentPoly::sym_monomial(k / 2).scale(&RatFunc::int(3)));
        let g = special().apply_dsym(&f).unwrap();
        for z in &zs {
            assert_eq!(eval_at(&g, z), dsym_pointwise(&f, &p, z), "k = {k}");
        }
    }
}

#[test]
fn dsym_keeps_degree_and_symmetry() {
    for k in 0..=8 {
        let g = symbolic().apply_dsym(&LaurentPoly::sym_monomial(k)).unwrap();
        assert!(g.is_symmetric());
        assert!(g.degree() <= k as i32);
    }
}

#[test]
fn monic_symmetric_eigenfunctions() {
    for n in 0..=8u32 {
        let p = symbolic().askey_wilson(n).unwrap();
        assert!(p.is_symmetric(), "P_{n}");
        assert_eq!(p.degree(), n as i32);
        assert!(p.coeff(n as i32).is_one());
        if n <= 5 {
            assert!(symbolic().eigen_residual(n).unwrap().is_zero(), "P_{n}");
        }
    }
    for n in 0..=8 {
        let p = special().askey_wilson(n).unwrap();
        let lhs = special().apply_dsym(&p).unwrap();
        assert_eq!(lhs, p.scale(&special().eigenvalue(n)), "P_{n} at a point");
    }
}

#[test]
fn first_polynomial_by_projection() {
    // D_sym (z + 1/z) = lambda_1 (z + 1/z) + r with r constant, so
    // P_1 = z + 1/z + r / (lambda_1 - lambda_0).
    let h = symbolic();
    let k1 = LaurentPoly::sym_monomial(1);
    let r = h.apply_dsym(&k1).unwrap().sub(&k1.scale(&h.eigenvalue(1)));
    assert_eq!(r.degree(), 0);
    let c = r.coeff(0).div(&h.eigenvalue(1).sub(&h.eigenvalue(0))).unwrap();
    assert_eq!(h.askey_wilson(1).unwrap(), k1.add(&LaurentPoly::one().scale(&c)));
}

#[test]
fn eigenvalues_are_distinct() {
    let v = ParamValues::at_point(&point());
    let seen: HashSet<BigRational> = (0..=20).map(|n| v.eigenvalue(n).as_rational().unwrap()).collect();
    assert_eq!(seen.len(), 21);
}

#[test]
fn pochhammer_examples() {
    let q = RatFunc::var(daha_core::Var::Q);
    let a = RatFunc::var(daha_core::Var::A);
    let one = RatFunc::one();
    assert!(qpochhammer(&a, 0, &q).is_one());
    assert_eq!(qpochhammer(&a, 1, &q), one.sub(&a));
    assert_eq!(qpochhammer(&a, 2, &q), one.sub(&a).mul(&one.sub(&a.mul(&q))));
}

#[test]
fn shifted_family() {
    let h = symbolic();
    assert!(h.shifted_qn(0).unwrap().is_zero());
    let v = h.values();
    let abi = Scalar::one().div(&v.ab()).unwrap().base().clone();
    let q1 = h.shifted_qn(1).unwrap();
    let apb = v.a.add(&v.b).base().clone();
    let expect = LaurentPoly::from_ascending(&[abi.clone(), apb.mul(&abi).neg(), RatFunc::one()]).shift(-1);
    assert_eq!(q1, expect);
    for n in 1..=6 {
        let q = special().shifted_qn(n).unwrap();
        assert_eq!(q.max_exp(), Some(n as i32));
        assert!(q.coeff(n as i32).is_one());
        let p = special().askey_wilson(n).unwrap();
        assert_ne!(q.coeff(0), p.coeff(0), "Q_{n} vs P_{n}");
    }
}

#[test]
fn invariant_under_parameter_swaps() {
    let v = ParamValues::symbolic();
    let ab = BasicRep::new(&ParamValues { a: v.b.clone(), b: v.a.clone(), ..v.clone() });
    let ac = BasicRep::new(&ParamValues { a: v.c.clone(), c: v.a.clone(), ..v.clone() });
    for n in 0..=5 {
        let p = symbolic().askey_wilson(n).unwrap();
        assert_eq!(ab.askey_wilson(n).unwrap(), p, "a<->b, n = {n}");
        assert_eq!(ac.askey_wilson(n).unwrap(), p, "a<->c, n = {n}");
    }
}

#[test]
fn three_term_recurrence() {
    let h = special();
    for n in 0..=6 {
        let (beta, gamma) = h.recurrence_coeffs(n).unwrap();
        let pn = h.askey_wilson(n).unwrap();
        let prev = if n == 0 { LaurentPoly::zero() } else { h.askey_wilson(n - 1).unwrap() };
        let resid = h
            .apply_k1(&pn)
            .sub(&h.askey_wilson(n + 1).unwrap())
            .sub(&pn.scale(&beta))
            .sub(&prev.scale(&gamma));
        assert!(resid.is_zero(), "n = {n}");
        assert_eq!(gamma.is_zero(), n == 0);
    }
    let (beta0, _) = h.recurrence_coeffs(0).unwrap();
    let p1 = h.askey_wilson(1).unwrap();
    assert_eq!(beta0, LaurentPoly::sym_monomial(1).sub(&p1).coeff(0));
}

#[test]
fn casimir_is_constant() {
    let h = symbolic();
    let q0 = h.constants().q0;
    for k in 0..=6 {
        let f = LaurentPoly::sym_monomial(k);
        assert_eq!(h.casimir_apply(&f).unwrap(), f.scale(&q0), "k = {k}");
    }
}

#[test]
fn relations_vanish_and_perturbation_does_not() {
    let h = symbolic();
    for r in h.check_aw_relations_in_rep(6).unwrap() {
        assert!(r.is_zero());
    }
    let mut k = h.constants();
    k.b = k.b.add(&RatFunc::one());
    let [r1, _] = h.relation_residuals_with(&LaurentPoly::sym_monomial(1), &k).unwrap();
    assert!(!r1.is_zero());
    let RepConstants { q0, .. } = h.constants();
    let mut k = h.constants();
    k.q0 = q0.add(&RatFunc::one());
    let f = LaurentPoly::sym_monomial(2);
    assert_ne!(h.casimir_apply_with(&f, &k).unwrap(), f.scale(&k.q0));
}

#[test]
fn word_agrees_with_jacobi_model() {
    let h = special();
    let f = LaurentPoly::sym_monomial(1);
    let w = [Op::K0, Op::K1, Op::K0];
    assert_eq!(h.apply_word(&w, &f).unwrap(), h.apply_word_jacobi(&w, &f).unwrap());
    let lambda0 = h.eigenvalue(0);
    assert_eq!(h.apply_word(&[Op::K1, Op::K0], &LaurentPoly::one()).unwrap(), f.scale(&lambda0));
    assert_eq!(h.apply_word(&[], &f).unwrap(), f);
}
