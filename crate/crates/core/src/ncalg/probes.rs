//! Commutator probes: the centralizer of `T1`, the shift operators, and
//! sampled evidence that the center is trivial.

use super::engine::DahaAlgebra;
use super::spherical::idempotents;
use super::{Key, Letter, NormalForm};
use crate::error::Result;
use crate::scalar::Scalar;

fn commutator(h: &DahaAlgebra, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
    Ok(h.multiply(x, y)?.sub(&h.multiply(y, x)?))
}

/// `e T1 - T1 e`.
pub fn centralizer_probe(h: &DahaAlgebra, e: &NormalForm) -> Result<NormalForm> {
    let t1 = NormalForm::monomial((0, 0, 1), Scalar::one());
    commutator(h, e, &t1)
}

/// `P_sym U - U P_sym`.
pub fn psym_commutator(h: &DahaAlgebra, u: &NormalForm) -> Result<NormalForm> {
    let (p, _) = idempotents(h)?;
    commutator(h, &p, u)
}

fn sandwich_y(h: &DahaAlgebra, f: &NormalForm, yi_coef: &Scalar, constant: &Scalar) -> Result<NormalForm> {
    let mid = NormalForm::from_terms([
        ((0, 1, 0), Scalar::one()),
        ((0, -1, 0), yi_coef.clone()),
        ((0, 0, 0), constant.neg()),
    ]);
    h.multiply(&h.multiply(f, &mid)?, f)
}

/// `(T1+1)(Y + q^-1 a^2 b^2 cd Y^-1 - (q^-1 abcd + ab))(T1+1)` and
/// `(T1+ab)(Y + q^-1 cd Y^-1 - (q^-1 cd + 1))(T1+ab)`; both vanish.
pub fn shift_operator_identities(h: &DahaAlgebra) -> Result<(NormalForm, NormalForm)> {
    let v = h.values();
    let one = Scalar::one();
    let ab = v.ab();
    let qcd = v.qinv().mul(&v.cd());
    let minus = sandwich_y(h, &h.t1_plus(&one), &qcd.mul(&ab).mul(&ab), &v.u().add(&ab))?;
    let plus = sandwich_y(h, &h.t1_plus(&ab), &qcd, &qcd.add(&one))?;
    Ok((minus, plus))
}

/// The first shift-operator sandwich with `a^2 b^2` replaced by `ab`.
pub fn shift_operator_perturbed(h: &DahaAlgebra) -> Result<NormalForm> {
    let v = h.values();
    let one = Scalar::one();
    let ab = v.ab();
    let qcd = v.qinv().mul(&v.cd());
    sandwich_y(h, &h.t1_plus(&one), &qcd.mul(&ab), &v.u().add(&ab))
}

/// For each non-identity basis element with `|m| + |n| + i <= max_degree`,
/// whether it fails to commute with at least one of `Z`, `Y`, `T1`.
pub fn center_probe(h: &DahaAlgebra, max_degree: i32) -> Result<Vec<(Key, bool)>> {
    let gens: Vec<NormalForm> = [Letter::Z, Letter::Y, Letter::T1]
        .iter()
        .map(|&x| h.reduce_word(&[x]))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..=1u8 {
        for m in -max_degree..=max_degree {
            for n in -max_degree..=max_degree {
                if m.abs() + n.abs() + i as i32 > max_degree || (m, n, i) == (0, 0, 0) {
                    continue;
                }
                let b = NormalForm::monomial((m, n, i), Scalar::one());
                let mut noncentral = false;
                for g in &gens {
                    if !commutator(h, &b, g)?.is_zero() {
                        noncentral = true;
                        break;
                    }
                }
                out.push(((m, n, i), noncentral));
            }
        }
    }
    Ok(out)
}
