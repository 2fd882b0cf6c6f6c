//! Duality anti-isomorphisms. With `s^2 = q^-1 abcd`, the generators
//! `Y' = a Z^-1`, `Z' = s Y^-1`, `T1' = T1` of the DAHA satisfy the defining
//! relations with parameters `(s, ab/s, ac/s, ad/s)` in reversed order, and
//! likewise `K0' = a K1`, `K1' = s^-1 K0` for `AW(3)` and its extension.
//!
//! `duality_image` maps an element of the dual-parameter algebra to the
//! original one: words are reversed, letters replaced by their images, and
//! the dual parameter values substituted into the coefficients.

use super::aw::{casimir_word, relation_k0, relation_k1, AwRelation};
use super::rules::daha_relations;
use super::{Alphabet, Element, Letter};
use crate::error::{Error, Result};
use crate::params::{ParamValues, Params};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityKind {
    Aw,
    Daha,
}

/// Image of one letter: `a^a_pow s^s_pow` times a single letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LetterImage {
    pub from: Letter,
    pub to: Letter,
    pub a_pow: i32,
    pub s_pow: i32,
}

const fn img(from: Letter, to: Letter, a_pow: i32, s_pow: i32) -> LetterImage {
    LetterImage { from, to, a_pow, s_pow }
}

pub const DAHA_DUALITY: [LetterImage; 5] = [
    img(Letter::Y, Letter::Zi, 1, 0),
    img(Letter::Yi, Letter::Z, -1, 0),
    img(Letter::Z, Letter::Yi, 0, 1),
    img(Letter::Zi, Letter::Y, 0, -1),
    img(Letter::T1, Letter::T1, 0, 0),
];

pub const AW_DUALITY: [LetterImage; 3] = [
    img(Letter::K0, Letter::K1, 1, 0),
    img(Letter::K1, Letter::K0, 0, -1),
    img(Letter::T1, Letter::T1, 0, 0),
];

fn map_for(kind: DualityKind) -> &'static [LetterImage] {
    match kind {
        DualityKind::Aw => &AW_DUALITY,
        DualityKind::Daha => &DAHA_DUALITY,
    }
}

/// Applies a letter map anti-multiplicatively and substitutes `dual` into
/// the coefficients.
pub fn image_with(
    map: &[LetterImage],
    values: &ParamValues,
    s: &Scalar,
    dual: &ParamValues,
    e: &Element,
) -> Result<Element> {
    let mut out = Element::zero(e.alphabet());
    for (w, c) in e.terms() {
        let mut coef = dual.substitute(c)?;
        let mut word = Vec::with_capacity(w.len());
        for &x in w.iter().rev() {
            let li = map.iter().find(|li| li.from == x).ok_or(Error::AlphabetMismatch)?;
            coef = coef.mul(&values.a.pow(li.a_pow)?).mul(&s.pow(li.s_pow)?);
            word.push(li.to);
        }
        out.add_term(word, coef);
    }
    Ok(out)
}

/// The image of `e`, an element of the algebra with parameters
/// `(s, ab/s, ac/s, ad/s)`, in the algebra with parameters `params`; also
/// returns the dual parameter values.
pub fn duality_image(params: &Params, e: &Element, kind: DualityKind) -> Result<(Element, ParamValues)> {
    let s = params.sqrt()?;
    let expected = match kind {
        DualityKind::Aw => Alphabet::Aw,
        DualityKind::Daha => Alphabet::Daha,
    };
    if e.alphabet() != expected {
        return Err(Error::AlphabetMismatch);
    }
    let dual = params.values().dual(s)?;
    let image = image_with(map_for(kind), params.values(), s, &dual, e)?;
    Ok((image, dual))
}

/// Images of every defining DAHA relation of the dual-parameter algebra;
/// each must reduce to zero.
pub fn daha_dual_relations(params: &Params) -> Result<Vec<(String, Element)>> {
    daha_relations(&ParamValues::symbolic())
        .into_iter()
        .map(|(name, rel)| Ok((name, duality_image(params, &rel, DualityKind::Daha)?.0)))
        .collect()
}

/// Images of the extended `AW` relations of the dual-parameter algebra,
/// including the Casimir relation with the dual value of `Q0`; each must
/// embed to zero.
pub fn aw_dual_relations(params: &Params) -> Result<Vec<(String, Element)>> {
    let sym = ParamValues::symbolic();
    let q0 = sym.structure_constants().q0;
    let casimir = casimir_word(&sym, AwRelation::Extended).sub(&Element::scalar(Alphabet::Aw, q0));
    let t1 = Element::aw(&[Letter::T1]);
    let t1_ab = t1.add(&Element::scalar(Alphabet::Aw, sym.ab()));
    let t1_one = t1.add(&Element::one(Alphabet::Aw));
    let rels = vec![
        ("K1K0K1".to_string(), relation_k1(&sym, AwRelation::Extended)),
        ("K0K1K0".to_string(), relation_k0(&sym, AwRelation::Extended)),
        ("casimir".to_string(), casimir),
        ("T1K0".to_string(), t1.mul(&Element::aw(&[Letter::K0])).sub(&Element::aw(&[Letter::K0, Letter::T1]))),
        ("T1K1".to_string(), t1.mul(&Element::aw(&[Letter::K1])).sub(&Element::aw(&[Letter::K1, Letter::T1]))),
        ("T1quadratic".to_string(), t1_ab.mul(&t1_one)),
    ];
    rels.into_iter()
        .map(|(name, rel)| Ok((name, duality_image(params, &rel, DualityKind::Aw)?.0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::aw::embed_aw;
    use crate::ncalg::DahaAlgebra;

    fn extended() -> Params {
        Params::symbolic().with_extension()
    }

    #[test]
    fn daha_relations_map_to_zero() {
        let p = extended();
        let h = DahaAlgebra::new(p.values().clone());
        for (name, img) in daha_dual_relations(&p).unwrap() {
            assert!(h.reduce(&img).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn aw_relations_map_to_zero() {
        let p = extended();
        let h = DahaAlgebra::new(p.values().clone());
        for (name, img) in aw_dual_relations(&p).unwrap() {
            assert!(embed_aw(&h, &img).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn printed_z_image_fails() {
        // Z -> s^-1 Y^-1 instead of s Y^-1 breaks the relations.
        let p = extended();
        let v = p.values();
        let s = p.sqrt().unwrap();
        let dual = v.dual(s).unwrap();
        let mut map = DAHA_DUALITY;
        map[2].s_pow = -1;
        map[3].s_pow = 1;
        let h = DahaAlgebra::new(v.clone());
        let failing = daha_relations(&ParamValues::symbolic())
            .into_iter()
            .filter(|(_, rel)| !h.reduce(&image_with(&map, v, s, &dual, rel).unwrap()).unwrap().is_zero())
            .count();
        assert!(failing > 0);
    }

    #[test]
    fn disabled_extension_is_reported() {
        let e = Element::daha(&[Letter::Y]);
        assert!(matches!(duality_image(&Params::symbolic(), &e, DualityKind::Daha), Err(Error::ExtensionDisabled)));
    }
}
