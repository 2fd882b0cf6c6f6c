//! The AW alphabet: defining relations of `AW(3)` and its central extension,
//! the Casimir word, and the embedding into the DAHA that decides equality.

use super::engine::DahaAlgebra;
use super::{sum_elements, Alphabet, Element, Letter, NormalForm};
use crate::error::{Error, Result};
use crate::params::ParamValues;
use crate::scalar::Scalar;

use Letter::{K0, K1, T1};

fn w(letters: &[Letter]) -> Element {
    Element::aw(letters)
}

fn c(x: &Scalar) -> Element {
    Element::scalar(Alphabet::Aw, x.clone())
}

/// Whether a relation is the plain `AW(3)` one or its central extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwRelation {
    Plain,
    Extended,
}

/// `T1 + ab` as an AW element.
fn t1_ab(v: &ParamValues) -> Element {
    w(&[T1]).add(&c(&v.ab()))
}

/// `(q+q^-1) K1 K0 K1 - K1^2 K0 - K0 K1^2 - (B K1 + C0 K0 + D0)`, with
/// `E K1 (T1+ab) + F0 (T1+ab)` also subtracted in the extended form.
pub fn relation_k1(v: &ParamValues, kind: AwRelation) -> Element {
    let sc = v.structure_constants();
    let qq = v.q.add(&v.qinv());
    let lhs = c(&qq).mul(&w(&[K1, K0, K1])).sub(&w(&[K1, K1, K0])).sub(&w(&[K0, K1, K1]));
    let mut rhs = sum_elements(
        Alphabet::Aw,
        [c(&sc.b).mul(&w(&[K1])), c(&sc.c0).mul(&w(&[K0])), c(&sc.d0)],
    );
    if kind == AwRelation::Extended {
        let f = t1_ab(v);
        rhs = rhs
            .add(&c(&sc.e).mul(&w(&[K1])).mul(&f))
            .add(&c(&sc.f0).mul(&f));
    }
    lhs.sub(&rhs)
}

/// The companion relation with `K0` and `K1` exchanged in the words.
pub fn relation_k0(v: &ParamValues, kind: AwRelation) -> Element {
    let sc = v.structure_constants();
    let qq = v.q.add(&v.qinv());
    let lhs = c(&qq).mul(&w(&[K0, K1, K0])).sub(&w(&[K0, K0, K1])).sub(&w(&[K1, K0, K0]));
    let mut rhs = sum_elements(
        Alphabet::Aw,
        [c(&sc.b).mul(&w(&[K0])), c(&sc.c1).mul(&w(&[K1])), c(&sc.d1)],
    );
    if kind == AwRelation::Extended {
        let f = t1_ab(v);
        rhs = rhs
            .add(&c(&sc.e).mul(&w(&[K0])).mul(&f))
            .add(&c(&sc.f1).mul(&f));
    }
    lhs.sub(&rhs)
}

/// The Casimir word. In the extended form `B`, `D0`, `D1` are replaced by
/// their `(T1+ab)`-corrected versions and `G (T1+ab)` is added.
pub fn casimir_word(v: &ParamValues, kind: AwRelation) -> Element {
    let sc = v.structure_constants();
    let q = &v.q;
    let qi = v.qinv();
    let one = Scalar::one();
    let q2 = q.mul(q).add(&one).add(&qi.mul(&qi));
    let qq = q.add(&qi);
    let q3 = q.add(&one).add(&qi);
    let (mut bb, mut d0, mut d1) = (c(&sc.b), c(&sc.d0), c(&sc.d1));
    let mut extra = Element::zero(Alphabet::Aw);
    if kind == AwRelation::Extended {
        let f = t1_ab(v);
        bb = bb.add(&c(&sc.e).mul(&f));
        d0 = d0.add(&c(&sc.f0).mul(&f));
        d1 = d1.add(&c(&sc.f1).mul(&f));
        extra = c(&sc.g).mul(&f);
    }
    sum_elements(
        Alphabet::Aw,
        [
            w(&[K1, K0, K1, K0]),
            c(&q2).mul(&w(&[K0, K1, K0, K1])).neg(),
            c(&qq).mul(&w(&[K0, K0, K1, K1])),
            c(&qq).mul(&c(&sc.c0).mul(&w(&[K0, K0])).add(&c(&sc.c1).mul(&w(&[K1, K1])))),
            bb.mul(&c(&q3).mul(&w(&[K0, K1])).add(&w(&[K1, K0]))),
            c(&q3).mul(&d0.mul(&w(&[K0])).add(&d1.mul(&w(&[K1])))),
            extra,
        ],
    )
}

/// Image under `K0 -> Y + q^-1 abcd Y^-1`, `K1 -> Z + Z^-1`, `T1 -> T1`.
pub fn embed_aw(h: &DahaAlgebra, e: &Element) -> Result<NormalForm> {
    if e.alphabet() != Alphabet::Aw {
        return Err(Error::AlphabetMismatch);
    }
    let u = h.values().u();
    let mut out = NormalForm::zero();
    for (word, coef) in e.terms() {
        let mut cur = NormalForm::scalar(coef.clone());
        for &x in word {
            cur = match x {
                K0 => {
                    let mut s = h.mul_letter(&cur, Letter::Y)?;
                    s.add_scaled(&h.mul_letter(&cur, Letter::Yi)?, &u);
                    s
                }
                K1 => {
                    let mut s = h.mul_letter(&cur, Letter::Z)?;
                    s.add_scaled(&h.mul_letter(&cur, Letter::Zi)?, &Scalar::one());
                    s
                }
                T1 => h.mul_letter(&cur, Letter::T1)?,
                _ => return Err(Error::AlphabetMismatch),
            };
        }
        out.add_scaled(&cur, &Scalar::one());
    }
    Ok(out)
}

/// Equality in the central extension, decided through the injective embedding.
pub fn aw_equal(h: &DahaAlgebra, u: &Element, v: &Element) -> Result<bool> {
    Ok(embed_aw(h, &u.sub(v))?.is_zero())
}

/// Equality in `AW(3, Q0)`, the quotient by `T1 = -ab`: the spherical map
/// `U -> U (T1 + 1)` is injective on it.
pub fn aw_q0_equal(h: &DahaAlgebra, u: &Element, v: &Element) -> Result<bool> {
    let x = embed_aw(h, &u.sub(v))?;
    Ok(h.multiply(&x, &h.t1_plus(&Scalar::one()))?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_embed_as_stated() {
        let h = DahaAlgebra::new(ParamValues::symbolic());
        let k1 = embed_aw(&h, &w(&[K1])).unwrap();
        assert_eq!(k1, h.zy(1, 0).add(&h.zy(-1, 0)));
        let k0 = embed_aw(&h, &w(&[K0])).unwrap();
        assert_eq!(k0, h.zy(0, 1).add(&h.zy(0, -1).scale(&h.values().u())));
    }

    #[test]
    fn k0_k1_do_not_commute() {
        let h = DahaAlgebra::new(ParamValues::symbolic());
        assert!(!aw_equal(&h, &w(&[K0, K1]), &w(&[K1, K0])).unwrap());
    }
}
