//! Reduction to the basis `Z^m Y^n T1^i` by right multiplication, one letter
//! at a time, with memoized expansions of `Y^n Z^{+-1}` and `Y^n T1 Z^{+-1}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{Alphabet, Element, Key, Letter, NormalForm};
use super::rules::Rules;
use crate::error::{Error, Result};
use crate::params::ParamValues;
use crate::scalar::Scalar;

/// Default step budget per reduced word.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// The DAHA at a fixed set of parameter values.
#[derive(Debug)]
pub struct DahaAlgebra {
    values: ParamValues,
    rules: Rules,
    budget: u64,
    /// `Y^n Z^e` for `e = +-1`.
    yz: Mutex<HashMap<(i32, i8), Arc<NormalForm>>>,
    /// `Y^n T1 Z^e` for `e = +-1`.
    ytz: Mutex<HashMap<(i32, i8), Arc<NormalForm>>>,
}

struct Steps {
    used: u64,
    budget: u64,
}

impl Steps {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }
}

fn shifted(nf: &NormalForm, m: i32) -> impl Iterator<Item = (Key, &Scalar)> + '_ {
    nf.terms().iter().map(move |(&(k, l, t), c)| ((k + m, l, t), c))
}

impl DahaAlgebra {
    pub fn new(values: ParamValues) -> Self {
        DahaAlgebra::with_budget(values, DEFAULT_BUDGET)
    }

    pub fn with_budget(values: ParamValues, budget: u64) -> Self {
        let rules = Rules::new(&values);
        DahaAlgebra {
            values,
            rules,
            budget,
            yz: Mutex::new(HashMap::new()),
            ytz: Mutex::new(HashMap::new()),
        }
    }

    pub fn values(&self) -> &ParamValues {
        &self.values
    }

    pub fn rules(&self) -> &Rules {
        &self.rules
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn steps(&self) -> Steps {
        Steps { used: 0, budget: self.budget }
    }

    /// `Y^n Z^e`.
    fn y_pow_z(&self, n: i32, e: i8) -> Arc<NormalForm> {
        if let Some(v) = self.yz.lock().unwrap().get(&(n, e)) {
            return v.clone();
        }
        let v = Arc::new(self.compute_y_pow_z(n, e));
        self.yz.lock().unwrap().insert((n, e), v.clone());
        v
    }

    fn compute_y_pow_z(&self, n: i32, e: i8) -> NormalForm {
        if n == 0 {
            return NormalForm::monomial((e as i32, 0, 0), Scalar::one());
        }
        let (step, y) = if n > 0 { (1, Letter::Y) } else { (-1, Letter::Yi) };
        let z = if e > 0 { Letter::Z } else { Letter::Zi };
        let rhs = self.rules.y_times_z(y, z).expect("Y-letter times Z-letter");
        // Y^n Z = Y^(n-1) (Y Z) and each term of (Y Z) is Z^k Y^l T1^t with |k| <= 1.
        let mut steps = Steps { used: 0, budget: u64::MAX };
        let mut out = NormalForm::zero();
        for (&(k, l, t), c) in rhs.terms() {
            let mut part = if k == 0 {
                NormalForm::monomial((0, n - step, 0), Scalar::one())
            } else {
                (*self.y_pow_z(n - step, k as i8)).clone()
            };
            let ys = if l >= 0 { Letter::Y } else { Letter::Yi };
            for _ in 0..l.unsigned_abs() {
                part = self.mul_letter_counted(&part, ys, &mut steps).expect("unbounded");
            }
            if t == 1 {
                part = self.mul_letter_counted(&part, Letter::T1, &mut steps).expect("unbounded");
            }
            out.add_scaled(&part, c);
        }
        out
    }

    /// `Y^n T1 Z^e`.
    fn y_pow_t1_z(&self, n: i32, e: i8) -> Arc<NormalForm> {
        if let Some(v) = self.ytz.lock().unwrap().get(&(n, e)) {
            return v.clone();
        }
        let z = if e > 0 { Letter::Z } else { Letter::Zi };
        let rhs = self.rules.t1_times(z).expect("T1 times Z-letter");
        let mut steps = Steps { used: 0, budget: u64::MAX };
        let mut out = NormalForm::zero();
        for (&(k, _l, t), c) in rhs.terms() {
            let mut part = if k == 0 {
                NormalForm::monomial((0, n, 0), Scalar::one())
            } else {
                (*self.y_pow_z(n, k as i8)).clone()
            };
            if t == 1 {
                part = self.mul_letter_counted(&part, Letter::T1, &mut steps).expect("unbounded");
            }
            out.add_scaled(&part, c);
        }
        let v = Arc::new(out);
        self.ytz.lock().unwrap().insert((n, e), v.clone());
        v
    }

    /// Accumulates `c * Z^m Y^n T1^t * x` into `out`.
    fn mono_letter(&self, (m, n, t): Key, c: &Scalar, x: Letter, out: &mut NormalForm) {
        match (x, t) {
            (Letter::T1, 0) => out.add_term((m, n, 1), c),
            (Letter::T1, _) => {
                out.add_term((m, n, 1), &c.mul(&self.rules.t1_lin));
                out.add_term((m, n, 0), &c.mul(&self.rules.t1_const));
            }
            (Letter::Y, 0) => out.add_term((m, n + 1, 0), c),
            (Letter::Yi, 0) => out.add_term((m, n - 1, 0), c),
            (Letter::Y | Letter::Yi, _) => {
                let rhs = self.rules.t1_times(x).unwrap();
                for (&(_, l, tt), r) in rhs.terms() {
                    out.add_term((m, n + l, tt), &c.mul(r));
                }
            }
            (Letter::Z | Letter::Zi, _) => {
                let e = if x == Letter::Z { 1 } else { -1 };
                let v = if t == 0 { self.y_pow_z(n, e) } else { self.y_pow_t1_z(n, e) };
                for (k, r) in shifted(&v, m) {
                    out.add_term(k, &c.mul(r));
                }
            }
            (Letter::K0 | Letter::K1, _) => unreachable!("AW letter in DAHA reduction"),
        }
    }

    fn mul_letter_counted(&self, nf: &NormalForm, x: Letter, steps: &mut Steps) -> Result<NormalForm> {
        let mut out = NormalForm::zero();
        for (&k, c) in nf.terms() {
            steps.tick()?;
            self.mono_letter(k, c, x, &mut out);
        }
        Ok(out)
    }

    /// `nf * x` for a single DAHA letter.
    pub fn mul_letter(&self, nf: &NormalForm, x: Letter) -> Result<NormalForm> {
        if !x.in_alphabet(Alphabet::Daha) {
            return Err(Error::AlphabetMismatch);
        }
        self.mul_letter_counted(nf, x, &mut self.steps())
    }

    /// `nf * w` for a word over the DAHA alphabet.
    pub fn mul_word(&self, nf: &NormalForm, w: &[Letter]) -> Result<NormalForm> {
        if w.iter().any(|l| !l.in_alphabet(Alphabet::Daha)) {
            return Err(Error::AlphabetMismatch);
        }
        let mut steps = self.steps();
        let mut cur = nf.clone();
        for &x in w {
            cur = self.mul_letter_counted(&cur, x, &mut steps)?;
        }
        Ok(cur)
    }

    /// The unique expansion in the basis `Z^m Y^n T1^i`.
    pub fn reduce(&self, e: &Element) -> Result<NormalForm> {
        if e.alphabet() != Alphabet::Daha {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = NormalForm::zero();
        for (w, c) in e.terms() {
            let nf = self.mul_word(&NormalForm::scalar(c.clone()), w)?;
            out.add_scaled(&nf, &Scalar::one());
        }
        Ok(out)
    }

    pub fn reduce_word(&self, w: &[Letter]) -> Result<NormalForm> {
        self.mul_word(&NormalForm::one(), w)
    }

    /// The product of two normal forms.
    pub fn multiply(&self, u: &NormalForm, v: &NormalForm) -> Result<NormalForm> {
        let mut out = NormalForm::zero();
        for (&k, c) in v.terms() {
            let w = super::key_word(k);
            let prod = self.mul_word(&u.scale(c), &w)?;
            out.add_scaled(&prod, &Scalar::one());
        }
        Ok(out)
    }

    /// Left product of a scalar-free letter sequence with `v`: reduce(w) * v.
    pub fn multiply_all(&self, xs: &[&NormalForm]) -> Result<NormalForm> {
        let mut acc = NormalForm::one();
        for x in xs {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// `T1`, `T1 + 1`, `T1 + ab` and friends as normal forms.
    pub fn t1_plus(&self, c: &Scalar) -> NormalForm {
        NormalForm::from_terms([((0, 0, 1), Scalar::one()), ((0, 0, 0), c.clone())])
    }

    /// `Z^m Y^n` as a normal form.
    pub fn zy(&self, m: i32, n: i32) -> NormalForm {
        NormalForm::monomial((m, n, 0), Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamValues;
    use Letter::*;

    fn alg() -> DahaAlgebra {
        DahaAlgebra::new(ParamValues::symbolic())
    }

    #[test]
    fn defining_relations_reproduce() {
        let h = alg();
        let r = Rules::new(h.values());
        assert_eq!(h.reduce_word(&[T1, Z]).unwrap(), r.t1_z);
        assert_eq!(h.reduce_word(&[Y, Z]).unwrap(), r.y_z);
        assert_eq!(h.reduce_word(&[Yi, Zi]).unwrap(), r.yi_zi);
        assert_eq!(h.reduce_word(&[T1, T1]).unwrap(), r.t1_square());
        assert_eq!(h.reduce_word(&[Z, Zi]).unwrap(), NormalForm::one());
        assert_eq!(h.reduce_word(&[Yi, Y]).unwrap(), NormalForm::one());
    }

    #[test]
    fn inverse_pairs_collapse_through_rules() {
        let h = alg();
        // Y Yi Z must be Z whichever way it is grouped.
        let left = h.reduce_word(&[Y, Yi, Z]).unwrap();
        let right = h.multiply(&h.reduce_word(&[Y]).unwrap(), &h.reduce_word(&[Yi, Z]).unwrap()).unwrap();
        assert_eq!(left, h.zy(1, 0));
        assert_eq!(right, h.zy(1, 0));
    }

    #[test]
    fn budget_is_enforced() {
        let h = DahaAlgebra::with_budget(ParamValues::symbolic(), 3);
        assert_eq!(h.reduce_word(&[Y, Y, Z, Z]), Err(Error::BudgetExhausted(3)));
    }
}
