//! The defining relations of the DAHA, solved for their normal-ordered sides.

use super::{key_word, Alphabet, Element, Key, Letter, NormalForm};
use crate::params::ParamValues;
use crate::scalar::Scalar;

/// Right-hand sides of the defining relations, all normal-ordered.
#[derive(Clone, Debug)]
pub struct Rules {
    /// `T1^2 = t1_lin * T1 + t1_const`.
    pub t1_lin: Scalar,
    pub t1_const: Scalar,
    pub t1_z: NormalForm,
    pub t1_zi: NormalForm,
    pub t1_y: NormalForm,
    pub t1_yi: NormalForm,
    pub y_z: NormalForm,
    pub y_zi: NormalForm,
    pub yi_z: NormalForm,
    pub yi_zi: NormalForm,
}

fn nf(terms: Vec<(Key, Scalar)>) -> NormalForm {
    NormalForm::from_terms(terms)
}

impl Rules {
    pub fn new(v: &ParamValues) -> Self {
        let one = Scalar::one();
        let q = &v.q;
        let qi = v.qinv();
        let (a, b, c, d) = (&v.a, &v.b, &v.c, &v.d);
        let ab = v.ab();
        let cd = v.cd();
        let abcd = v.abcd();
        let abcd_i = abcd.inv().expect("abcd != 0");
        let ab_i = ab.inv().expect("ab != 0");
        let u = v.u();
        let apb = a.add(b);
        let cpd = c.add(d);
        let abp1 = ab.add(&one);
        // 1 + q^-1 cd
        let w = one.add(&qi.mul(&cd));
        let omq = one.sub(q);
        let q2 = q.mul(q);
        let qi2 = qi.mul(&qi);

        let t1_z = nf(vec![
            ((-1, 0, 1), one.clone()),
            ((-1, 0, 0), abp1.clone()),
            ((0, 0, 0), apb.neg()),
        ]);
        let t1_zi = nf(vec![
            ((1, 0, 1), one.clone()),
            ((-1, 0, 0), abp1.neg()),
            ((0, 0, 0), apb.clone()),
        ]);
        let t1_y = nf(vec![
            ((0, -1, 1), u.clone()),
            ((0, 1, 0), abp1.neg()),
            ((0, 0, 0), ab.mul(&w)),
        ]);
        let q_abcd_i = q.mul(&abcd_i);
        let t1_yi = nf(vec![
            ((0, 1, 1), q_abcd_i.clone()),
            ((0, 1, 0), q_abcd_i.mul(&abp1)),
            ((0, 0, 0), q.mul(&cd.inv().expect("cd != 0")).mul(&w).neg()),
        ]);
        let y_z = nf(vec![
            ((1, 1, 0), q.clone()),
            ((-1, -1, 1), abp1.mul(&cd)),
            ((0, -1, 1), apb.mul(&cd).neg()),
            ((-1, 0, 1), w.neg()),
            ((-1, 0, 0), omq.mul(&abp1).mul(&w).neg()),
            ((0, 0, 1), cpd.clone()),
            ((0, 0, 0), omq.mul(&apb).mul(&w)),
        ]);
        let y_zi = nf(vec![
            ((-1, 1, 0), qi.clone()),
            ((-1, -1, 1), qi2.mul(&abp1).mul(&cd).neg()),
            ((0, -1, 1), qi2.mul(&apb).mul(&cd)),
            ((-1, 0, 1), qi.mul(&w)),
            ((0, 0, 1), qi.mul(&cpd).neg()),
        ]);
        let yi_z = nf(vec![
            ((1, -1, 0), qi.clone()),
            ((-1, -1, 1), q.mul(&ab_i).mul(&abp1).neg()),
            ((0, -1, 1), ab_i.mul(&apb)),
            ((-1, 0, 1), q_abcd_i.mul(&w)),
            ((-1, 0, 0), q_abcd_i.mul(&omq).mul(&abp1).mul(&w)),
            ((0, 0, 1), abcd_i.mul(&cpd).neg()),
            ((0, 0, 0), abcd_i.mul(&omq).mul(&abp1).mul(&cpd).neg()),
        ]);
        let yi_zi = nf(vec![
            ((-1, -1, 0), q.clone()),
            ((-1, -1, 1), q.mul(&ab_i).mul(&abp1)),
            ((0, -1, 1), ab_i.mul(&apb).neg()),
            ((-1, 0, 1), q2.mul(&abcd_i).mul(&w).neg()),
            ((0, 0, 1), q_abcd_i.mul(&cpd)),
        ]);
        Rules {
            t1_lin: abp1.neg(),
            t1_const: ab.neg(),
            t1_z,
            t1_zi,
            t1_y,
            t1_yi,
            y_z,
            y_zi,
            yi_z,
            yi_zi,
        }
    }

    pub fn t1_square(&self) -> NormalForm {
        nf(vec![((0, 0, 1), self.t1_lin.clone()), ((0, 0, 0), self.t1_const.clone())])
    }

    /// The right side for `T1 * x`.
    pub fn t1_times(&self, x: Letter) -> Option<&NormalForm> {
        match x {
            Letter::Z => Some(&self.t1_z),
            Letter::Zi => Some(&self.t1_zi),
            Letter::Y => Some(&self.t1_y),
            Letter::Yi => Some(&self.t1_yi),
            _ => None,
        }
    }

    /// The right side for `y * z` with `y` a Y-letter and `z` a Z-letter.
    pub fn y_times_z(&self, y: Letter, z: Letter) -> Option<&NormalForm> {
        match (y, z) {
            (Letter::Y, Letter::Z) => Some(&self.y_z),
            (Letter::Y, Letter::Zi) => Some(&self.y_zi),
            (Letter::Yi, Letter::Z) => Some(&self.yi_z),
            (Letter::Yi, Letter::Zi) => Some(&self.yi_zi),
            _ => None,
        }
    }

    /// Every length-two rewrite rule `lhs -> rhs`, including inverse collapse.
    pub fn length_two(&self) -> Vec<([Letter; 2], NormalForm)> {
        use Letter::*;
        let mut out = vec![([T1, T1], self.t1_square())];
        for x in [Z, Zi, Y, Yi] {
            out.push(([T1, x], self.t1_times(x).unwrap().clone()));
        }
        for y in [Y, Yi] {
            for z in [Z, Zi] {
                out.push(([y, z], self.y_times_z(y, z).unwrap().clone()));
            }
        }
        for x in [Z, Zi, Y, Yi] {
            out.push(([x, x.inverse().unwrap()], NormalForm::one()));
        }
        out
    }
}

/// The defining relations as named elements `lhs - rhs`, which vanish in the
/// algebra with parameters `v`.
pub fn daha_relations(v: &ParamValues) -> Vec<(String, Element)> {
    let rules = Rules::new(v);
    rules
        .length_two()
        .into_iter()
        .map(|(lhs, rhs)| {
            let name = format!("{}*{}", lhs[0].name(), lhs[1].name());
            let mut e = Element::daha(&lhs);
            for (&k, c) in rhs.terms() {
                e.add_term(key_word(k), c.neg());
            }
            debug_assert_eq!(e.alphabet(), Alphabet::Daha);
            (name, e)
        })
        .collect()
}
