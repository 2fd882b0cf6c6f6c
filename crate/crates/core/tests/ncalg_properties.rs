use std::sync::OnceLock;

use daha_core::ncalg::{
    daha_relations, duality_image, embed_aw, image_with, Alphabet, DahaAlgebra, DualityKind, Element, Letter, NormalForm,
    RewriteSystem, Strategy as Order, DAHA_DUALITY, DEFAULT_BUDGET,
};
use daha_core::params::{rat, ParamValues, Params};
use daha_core::Scalar;
use proptest::prelude::*;

use Letter::{Yi, Zi, K0, K1, T1, Y, Z};

fn algebra() -> &'static DahaAlgebra {
    static H: OnceLock<DahaAlgebra> = OnceLock::new();
    H.get_or_init(|| DahaAlgebra::new(ParamValues::symbolic()))
}

fn rewriter() -> &'static RewriteSystem {
    static R: OnceLock<RewriteSystem> = OnceLock::new();
    R.get_or_init(|| RewriteSystem::new(&ParamValues::symbolic(), DEFAULT_BUDGET))
}

fn extended() -> &'static (Params, DahaAlgebra) {
    static P: OnceLock<(Params, DahaAlgebra)> = OnceLock::new();
    P.get_or_init(|| {
        let p = Params::symbolic().with_extension();
        let h = DahaAlgebra::new(p.values().clone());
        (p, h)
    })
}

fn daha_letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(vec![Z, Zi, Y, Yi, T1])
}

fn aw_letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(vec![K0, K1, T1])
}

fn daha_word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(daha_letter(), 0..=max)
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn daha_element() -> impl Strategy<Value = Element> {
    prop::collection::vec((daha_word(6), small_scalar()), 1..=3).prop_map(|terms| {
        let mut e = Element::zero(Alphabet::Daha);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    })
}

fn small_normal_form() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec(((-2i32..=2, -2i32..=2, 0u8..=1), small_scalar()), 1..=2)
        .prop_map(NormalForm::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_form_is_a_fixed_point(e in daha_element()) {
        let h = algebra();
        let nf = h.reduce(&e).unwrap();
        prop_assert_eq!(h.reduce(&nf.to_element()).unwrap(), nf);
    }

    #[test]
    fn strategies_and_engine_agree(w in daha_word(6)) {
        let e = Element::daha(&w);
        let left = rewriter().normalize(&e, Order::Leftmost).unwrap();
        let right = rewriter().normalize(&e, Order::Rightmost).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, algebra().reduce(&e).unwrap());
    }

    #[test]
    fn reduction_is_linear(u in daha_element(), v in daha_element(), a in small_scalar(), b in small_scalar()) {
        let h = algebra();
        let lhs = h.reduce(&u.scale(&a).add(&v.scale(&b))).unwrap();
        let rhs = h.reduce(&u).unwrap().scale(&a).add(&h.reduce(&v).unwrap().scale(&b));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn multiplication_is_associative(x in small_normal_form(), y in small_normal_form(), z in small_normal_form()) {
        let h = algebra();
        let left = h.multiply(&h.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = h.multiply(&x, &h.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn embedding_is_multiplicative(
        u in prop::collection::vec(aw_letter(), 0..=3),
        v in prop::collection::vec(aw_letter(), 0..=3),
    ) {
        let h = algebra();
        let (eu, ev) = (Element::aw(&u), Element::aw(&v));
        let whole = embed_aw(h, &eu.mul(&ev)).unwrap();
        let parts = h.multiply(&embed_aw(h, &eu).unwrap(), &embed_aw(h, &ev).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn daha_duality_is_anti_multiplicative(u in daha_word(4), v in daha_word(4)) {
        let (p, h) = extended();
        let (eu, ev) = (Element::daha(&u), Element::daha(&v));
        let img = |e: &Element| duality_image(p, e, DualityKind::Daha).unwrap().0;
        let whole = img(&eu.mul(&ev));
        prop_assert_eq!(&whole, &img(&ev).mul(&img(&eu)));
        let reduced = h.multiply(&h.reduce(&img(&ev)).unwrap(), &h.reduce(&img(&eu)).unwrap()).unwrap();
        prop_assert_eq!(h.reduce(&whole).unwrap(), reduced);
    }

    #[test]
    fn aw_duality_is_anti_multiplicative(
        u in prop::collection::vec(aw_letter(), 0..=3),
        v in prop::collection::vec(aw_letter(), 0..=3),
    ) {
        let (p, h) = extended();
        let (eu, ev) = (Element::aw(&u), Element::aw(&v));
        let img = |e: &Element| duality_image(p, e, DualityKind::Aw).unwrap().0;
        let whole = img(&eu.mul(&ev));
        prop_assert_eq!(&whole, &img(&ev).mul(&img(&eu)));
        let split = h.multiply(&embed_aw(h, &img(&ev)).unwrap(), &embed_aw(h, &img(&eu)).unwrap()).unwrap();
        prop_assert_eq!(embed_aw(h, &whole).unwrap(), split);
    }
}

#[test]
fn duality_needs_the_dual_parameters() {
    let (p, h) = extended();
    let v = p.values();
    let s = p.sqrt().unwrap();
    let dual = v.dual(s).unwrap();
    let sym = ParamValues::symbolic();
    let failing = |target: &ParamValues| {
        daha_relations(&sym)
            .iter()
            .filter(|(_, rel)| !h.reduce(&image_with(&DAHA_DUALITY, v, s, target, rel).unwrap()).unwrap().is_zero())
            .count()
    };
    assert_eq!(failing(&dual), 0);
    // Keeping the original parameters breaks some relation.
    assert!(failing(v) > 0);
}
