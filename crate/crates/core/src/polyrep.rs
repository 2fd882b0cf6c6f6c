//! The basic representation on symmetric Laurent polynomials in `z`: `K0`
//! acts by the Askey–Wilson q-difference operator `D_sym`, `K1` by
//! multiplication with `z + z^-1`. Also the monic Askey–Wilson polynomials
//! `P_n`, the shifted family `Q_n`, the recurrence coefficients, and the
//! Casimir and `AW(3)` relations as operator identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::params::{ParamValues, StructureConstants};
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;

/// A Laurent polynomial in `z` with coefficients in `Q(q,a,b,c,d)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, RatFunc>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, RatFunc::one())
    }

    pub fn monomial(k: i32, c: RatFunc) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, c);
        p
    }

    /// `z^k + z^-k` for `k > 0`, and `1` for `k = 0`.
    pub fn sym_monomial(k: u32) -> Self {
        if k == 0 {
            return LaurentPoly::one();
        }
        let k = k as i32;
        LaurentPoly::monomial(k, RatFunc::one()).add(&LaurentPoly::monomial(-k, RatFunc::one()))
    }

    /// Builds from ascending coefficients `c[0] + c[1] z + ...`.
    pub fn from_ascending(coeffs: &[RatFunc]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(k as i32, c.clone());
        }
        p
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, k: i32) -> RatFunc {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: i32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Largest `|k|` with a nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> i32 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(k, c)| self.coeffs.get(&-k) == Some(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        self.map(|c| c.mul(s))
    }

    fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = LaurentPoly::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k, f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&i, x) in &self.coeffs {
            for (&j, y) in &other.coeffs {
                out.add_term(i + j, x.mul(y));
            }
        }
        out
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `f[x z]` for a scalar `x`.
    pub fn dilate(&self, x: &RatFunc) -> Result<Self> {
        let mut out = LaurentPoly::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k, c.mul(&x.pow(k)?));
        }
        Ok(out)
    }

    /// Lines `k: coef` for `k` from `-n` to `n`, `n` the degree.
    pub fn to_lines(&self) -> Vec<String> {
        let n = self.degree();
        (-n..=n).map(|k| format!("{k}: {}", self.coeff(k))).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*z^{k}")?;
        }
        Ok(())
    }
}

/// Operator letters: `K0 = D_sym`, `K1 = z + z^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    K0,
    K1,
}

pub type OperatorWord = Vec<Op>;

/// Exact quotient of `num` by the polynomial `den` (ascending coefficients,
/// nonzero constant term), or the degree of the leftover remainder.
fn divide_exact(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    let (Some(lo), Some(_)) = (num.min_exp(), num.max_exp()) else {
        return Ok(LaurentPoly::zero());
    };
    let dd = den.max_exp().expect("nonzero divisor");
    let lead = den.coeff(dd);
    let mut rem = num.shift(-lo);
    let mut quot = LaurentPoly::zero();
    while let Some(top) = rem.max_exp() {
        if top < dd {
            return Err(Error::InternalDenominatorResidue(top + lo));
        }
        let c = rem.coeff(top).div(&lead)?;
        let term = LaurentPoly::monomial(top - dd, c);
        rem = rem.sub(&den.mul(&term));
        quot = quot.add(&term);
    }
    Ok(quot.shift(lo))
}

fn base(s: &Scalar) -> RatFunc {
    assert!(!s.has_s(), "polynomial representation uses parameters in Q(q,a,b,c,d)");
    s.base().clone()
}

fn linear(c0: RatFunc, c1: RatFunc) -> LaurentPoly {
    LaurentPoly::from_ascending(&[c0, c1])
}

/// `(x;q)_n`.
pub fn qpochhammer(x: &RatFunc, n: u32, q: &RatFunc) -> RatFunc {
    let mut out = RatFunc::one();
    let mut xq = x.clone();
    for _ in 0..n {
        out = out.mul(&RatFunc::one().sub(&xq));
        xq = xq.mul(q);
    }
    out
}

/// Gaussian binomials `[n choose k]_q` for `0 <= k <= n`.
fn q_binomials(n: u32, q: &RatFunc) -> Vec<RatFunc> {
    let mut row = vec![RatFunc::one()];
    for m in 1..=n as usize {
        let mut next = vec![RatFunc::one(); m + 1];
        for k in 1..m {
            // [m, k] = [m-1, k-1] + q^k [m-1, k]
            next[k] = row[k - 1].add(&q.pow(k as i32).expect("q^k").mul(&row[k]));
        }
        row = next;
    }
    row
}

/// Structure constants with coefficients in `Q(q,a,b,c,d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepConstants {
    pub b: RatFunc,
    pub c0: RatFunc,
    pub c1: RatFunc,
    pub d0: RatFunc,
    pub d1: RatFunc,
    pub q0: RatFunc,
}

impl From<&StructureConstants> for RepConstants {
    fn from(sc: &StructureConstants) -> Self {
        RepConstants {
            b: base(&sc.b),
            c0: base(&sc.c0),
            c1: base(&sc.c1),
            d0: base(&sc.d0),
            d1: base(&sc.d1),
            q0: base(&sc.q0),
        }
    }
}

/// The basic representation at fixed parameters, with memos of `D_sym` on
/// the monomial basis and of the polynomials `P_n`.
pub struct BasicRep {
    values: ParamValues,
    q: RatFunc,
    a: RatFunc,
    b: RatFunc,
    c: RatFunc,
    d: RatFunc,
    dsym_memo: Mutex<HashMap<u32, LaurentPoly>>,
    pn_memo: Mutex<HashMap<u32, LaurentPoly>>,
}

impl BasicRep {
    pub fn new(values: &ParamValues) -> Self {
        BasicRep {
            values: values.clone(),
            q: base(&values.q),
            a: base(&values.a),
            b: base(&values.b),
            c: base(&values.c),
            d: base(&values.d),
            dsym_memo: Mutex::new(HashMap::new()),
            pn_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn values(&self) -> &ParamValues {
        &self.values
    }

    pub fn constants(&self) -> RepConstants {
        RepConstants::from(&self.values.structure_constants())
    }

    fn params(&self) -> [&RatFunc; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn abcd(&self) -> RatFunc {
        self.a.mul(&self.b).mul(&self.c).mul(&self.d)
    }

    pub fn eigenvalue(&self, n: u32) -> RatFunc {
        base(&self.values.eigenvalue(n))
    }

    /// `D_sym (z^k + z^-k)`, computed over rational functions in `z` and
    /// required to be a Laurent polynomial.
    fn dsym_basis(&self, k: u32) -> Result<LaurentPoly> {
        if let Some(p) = self.dsym_memo.lock().unwrap().get(&k) {
            return Ok(p.clone());
        }
        let q = &self.q;
        let one = RatFunc::one();
        let qinv = q.inv()?;
        let diag = one.add(&self.abcd().mul(&qinv));
        let mk = LaurentPoly::sym_monomial(k);
        let mut out = mk.scale(&diag);
        if k > 0 {
            let ki = k as i32;
            let qk = q.pow(ki)?;
            let qmk = q.pow(-ki)?;
            // f[qz] - f[z] and f[z/q] - f[z] for f = z^k + z^-k.
            let plus = LaurentPoly::monomial(ki, qk.sub(&one)).add(&LaurentPoly::monomial(-ki, qmk.sub(&one)));
            let minus = LaurentPoly::monomial(ki, qmk.sub(&one)).add(&LaurentPoly::monomial(-ki, qk.sub(&one)));
            let mut num_plus = linear(q.clone(), RatFunc::zero()).add(&LaurentPoly::monomial(2, one.neg()));
            let mut num_minus = linear(one.clone(), RatFunc::zero()).add(&LaurentPoly::monomial(2, q.neg()));
            for x in self.params() {
                num_plus = num_plus.mul(&linear(one.clone(), x.neg()));
                num_minus = num_minus.mul(&linear(x.clone(), one.neg()));
            }
            let total = num_plus.mul(&plus).add(&num_minus.mul(&minus));
            // (1 - z^2)(1 - q z^2)(q - z^2)
            let den = LaurentPoly::from_ascending(&[one.clone(), RatFunc::zero(), one.neg()])
                .mul(&LaurentPoly::from_ascending(&[one.clone(), RatFunc::zero(), q.neg()]))
                .mul(&LaurentPoly::from_ascending(&[q.clone(), RatFunc::zero(), one.neg()]));
            out = out.add(&divide_exact(&total, &den)?);
        }
        self.dsym_memo.lock().unwrap().insert(k, out.clone());
        Ok(out)
    }

    /// `D_sym f` for symmetric `f`.
    pub fn apply_dsym(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = LaurentPoly::zero();
        for (&k, c) in f.coeffs.range(0..) {
            out = out.add(&self.dsym_basis(k as u32)?.scale(c));
        }
        Ok(out)
    }

    /// Multiplication by `z + z^-1`.
    pub fn apply_k1(&self, f: &LaurentPoly) -> LaurentPoly {
        f.shift(1).add(&f.shift(-1))
    }

    /// Applies the letters right to left.
    pub fn apply_word(&self, w: &[Op], f: &LaurentPoly) -> Result<LaurentPoly> {
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut cur = f.clone();
        for &x in w.iter().rev() {
            cur = match x {
                Op::K0 => self.apply_dsym(&cur)?,
                Op::K1 => self.apply_k1(&cur),
            };
        }
        Ok(cur)
    }

    /// `sum_i c_i W_i f`.
    pub fn apply_combination(&self, terms: &[(RatFunc, &[Op])], f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (c, w) in terms {
            out = out.add(&self.apply_word(w, f)?.scale(c));
        }
        Ok(out)
    }

    /// `P_n` before normalization, with the factors of the normalizing
    /// divisor `a^n (abcd q^(n-1);q)_n`: the terminating `4phi3` sum times
    /// `(ab,ac,ad;q)_n`. Its coefficients only have powers of `q` in their
    /// denominators.
    pub fn askey_wilson_parts(&self, n: u32) -> Result<(LaurentPoly, Vec<RatFunc>)> {
        let q = &self.q;
        let one = RatFunc::one();
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let ni = n as i32;
        let top = self.abcd().mul(&q.pow(ni - 1)?);
        let mut norm = vec![a.pow(ni)?];
        let mut x = top.clone();
        for _ in 0..n {
            norm.push(one.sub(&x));
            x = x.mul(q);
        }
        if norm.iter().any(|f| f.is_zero()) {
            return Err(Error::DegenerateParameters { clause: "abcd q^m != 1".into(), m: n as i64 });
        }
        if let Some(p) = self.pn_memo.lock().unwrap().get(&n) {
            return Ok((p.clone(), norm));
        }
        let binom = q_binomials(n, q);
        let (ab, ac, ad) = (a.mul(b), a.mul(c), a.mul(d));
        let mut sum = LaurentPoly::zero();
        // (az, a/z; q)_k as a Laurent polynomial, built incrementally.
        let mut az = LaurentPoly::one();
        for k in 0..=n {
            // (q^-n;q)_k / (q;q)_k = (-1)^k q^(k(k-1)/2 - nk) [n choose k]_q
            let ki = k as i32;
            let sign = if k % 2 == 0 { one.clone() } else { one.neg() };
            let mut coef = sign
                .mul(&q.pow(ki * (ki - 1) / 2 - ni * ki + ki)?)
                .mul(&binom[k as usize])
                .mul(&qpochhammer(&top, k, q));
            // (ab,ac,ad;q)_n / (ab,ac,ad;q)_k
            let mut qj = q.pow(ki)?;
            for _ in k..n {
                for x in [&ab, &ac, &ad] {
                    coef = coef.mul(&one.sub(&x.mul(&qj)));
                }
                qj = qj.mul(q);
            }
            sum = sum.add(&az.scale(&coef));
            let aqk = a.mul(&q.pow(ki)?);
            // (1 - a q^k z)(1 - a q^k / z) = 1 + a^2 q^2k - a q^k (z + 1/z)
            let factor = LaurentPoly::monomial(0, one.add(&aqk.mul(&aqk)))
                .add(&LaurentPoly::sym_monomial(1).scale(&aqk.neg()));
            az = az.mul(&factor);
        }
        self.pn_memo.lock().unwrap().insert(n, sum.clone());
        Ok((sum, norm))
    }

    /// The monic Askey–Wilson polynomial `P_n`. The divisor is applied one
    /// irreducible factor at a time, so cancellation is a trial division.
    pub fn askey_wilson(&self, n: u32) -> Result<LaurentPoly> {
        let (mut p, norm) = self.askey_wilson_parts(n)?;
        for f in &norm {
            p = p.scale(&f.inv()?);
        }
        Ok(p)
    }

    /// `D_sym N - lambda_n N` for the unnormalized numerator `N` of `P_n`;
    /// zero exactly when the eigenvalue equation holds.
    pub fn eigen_residual(&self, n: u32) -> Result<LaurentPoly> {
        let (p, _) = self.askey_wilson_parts(n)?;
        Ok(self.apply_dsym(&p)?.sub(&p.scale(&self.eigenvalue(n))))
    }

    /// `Q_n = a^-1 b^-1 z^-1 (1 - a z)(1 - b z) P_(n-1)[z; qa, qb, c, d | q]`,
    /// with `Q_0 = 0`.
    pub fn shifted_qn(&self, n: u32) -> Result<LaurentPoly> {
        if n == 0 {
            return Ok(LaurentPoly::zero());
        }
        let one = RatFunc::one();
        let shifted = BasicRep::new(&self.values.shifted());
        let (num, mut norm) = shifted.askey_wilson_parts(n - 1)?;
        norm.push(self.a.mul(&self.b));
        // Multiply out before normalizing, as for `P_n`.
        let mut q = linear(one.clone(), self.a.neg())
            .mul(&linear(one, self.b.neg()))
            .shift(-1)
            .mul(&num);
        for f in &norm {
            q = q.scale(&f.inv()?);
        }
        Ok(q)
    }

    /// `(beta_n, gamma_n)` with `(z + 1/z) P_n = P_(n+1) + beta_n P_n + gamma_n P_(n-1)`;
    /// a nonzero leftover is reported as a residue.
    pub fn recurrence_coeffs(&self, n: u32) -> Result<(RatFunc, RatFunc)> {
        let pn = self.askey_wilson(n)?;
        let mut r = self.apply_k1(&pn).sub(&self.askey_wilson(n + 1)?);
        let ni = n as i32;
        let beta = r.coeff(ni);
        r = r.sub(&pn.scale(&beta));
        let gamma = if n == 0 {
            RatFunc::zero()
        } else {
            let g = r.coeff(ni - 1);
            r = r.sub(&self.askey_wilson(n - 1)?.scale(&g));
            g
        };
        if !r.is_zero() {
            return Err(Error::InternalDenominatorResidue(r.degree()));
        }
        Ok((beta, gamma))
    }

    /// The Casimir word with `K0 = D_sym`, `K1 = z + z^-1` and the given
    /// structure constants, applied to `f`.
    pub fn casimir_apply_with(&self, f: &LaurentPoly, k: &RepConstants) -> Result<LaurentPoly> {
        use Op::{K0, K1};
        let q = &self.q;
        let qi = q.inv()?;
        let one = RatFunc::one();
        let qq = q.add(&qi);
        let q2 = q.mul(q).add(&one).add(&qi.mul(&qi));
        let q3 = q.add(&one).add(&qi);
        let terms: Vec<(RatFunc, &[Op])> = vec![
            (one.clone(), &[K1, K0, K1, K0]),
            (q2.neg(), &[K0, K1, K0, K1]),
            (qq.clone(), &[K0, K0, K1, K1]),
            (qq.mul(&k.c0), &[K0, K0]),
            (qq.mul(&k.c1), &[K1, K1]),
            (k.b.mul(&q3), &[K0, K1]),
            (k.b.clone(), &[K1, K0]),
            (q3.mul(&k.d0), &[K0]),
            (q3.mul(&k.d1), &[K1]),
        ];
        self.apply_combination(&terms, f)
    }

    pub fn casimir_apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.casimir_apply_with(f, &self.constants())
    }

    /// LHS - RHS of the two `AW(3)` relations applied to `f`:
    /// `(q+q^-1) K1 K0 K1 - K1^2 K0 - K0 K1^2 - (B K1 + C0 K0 + D0)` and the
    /// companion with `K0`, `K1` (and `C0, D0` with `C1, D1`) exchanged.
    pub fn relation_residuals_with(&self, f: &LaurentPoly, k: &RepConstants) -> Result<[LaurentPoly; 2]> {
        use Op::{K0, K1};
        let qq = self.q.add(&self.q.inv()?);
        let one = RatFunc::one();
        let r1: Vec<(RatFunc, &[Op])> = vec![
            (qq.clone(), &[K1, K0, K1]),
            (one.neg(), &[K1, K1, K0]),
            (one.neg(), &[K0, K1, K1]),
            (k.b.neg(), &[K1]),
            (k.c0.neg(), &[K0]),
            (k.d0.neg(), &[]),
        ];
        let r2: Vec<(RatFunc, &[Op])> = vec![
            (qq, &[K0, K1, K0]),
            (one.neg(), &[K0, K0, K1]),
            (one.neg(), &[K1, K0, K0]),
            (k.b.neg(), &[K0]),
            (k.c1.neg(), &[K1]),
            (k.d1.neg(), &[]),
        ];
        Ok([self.apply_combination(&r1, f)?, self.apply_combination(&r2, f)?])
    }

    /// Residuals of both relations on `z^k + z^-k`, `0 <= k <= max_degree`.
    pub fn check_aw_relations_in_rep(&self, max_degree: u32) -> Result<Vec<LaurentPoly>> {
        let k = self.constants();
        let mut out = Vec::new();
        for deg in 0..=max_degree {
            out.extend(self.relation_residuals_with(&LaurentPoly::sym_monomial(deg), &k)?);
        }
        Ok(out)
    }

    /// Coordinates of symmetric `f` in the basis `P_0, P_1, ...`.
    pub fn expand_in_pn(&self, f: &LaurentPoly) -> Result<Vec<RatFunc>> {
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = f.degree();
        let mut coords = vec![RatFunc::zero(); n as usize + 1];
        let mut r = f.clone();
        for k in (0..=n).rev() {
            let c = r.coeff(k);
            if !c.is_zero() {
                r = r.sub(&self.askey_wilson(k as u32)?.scale(&c));
            }
            coords[k as usize] = c;
        }
        debug_assert!(r.is_zero());
        Ok(coords)
    }

    /// Applies a word in the model where `K0` is diagonal with entries
    /// `lambda_n` and `K1` is the tridiagonal recurrence matrix; an
    /// independent route to `apply_word`.
    pub fn apply_word_jacobi(&self, w: &[Op], f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut coords = self.expand_in_pn(f)?;
        for &x in w.iter().rev() {
            coords = match x {
                Op::K0 => coords
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c.mul(&self.eigenvalue(n as u32)))
                    .collect(),
                Op::K1 => {
                    let mut next = vec![RatFunc::zero(); coords.len() + 1];
                    for (n, c) in coords.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (beta, gamma) = self.recurrence_coeffs(n as u32)?;
                        next[n + 1] = next[n + 1].add(c);
                        next[n] = next[n].add(&c.mul(&beta));
                        if n > 0 {
                            next[n - 1] = next[n - 1].add(&c.mul(&gamma));
                        }
                    }
                    next
                }
            };
        }
        let mut out = LaurentPoly::zero();
        for (n, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.askey_wilson(n as u32)?.scale(c));
            }
        }
        Ok(out)
    }
}

pub fn apply_dsym(f: &LaurentPoly, values: &ParamValues) -> Result<LaurentPoly> {
    BasicRep::new(values).apply_dsym(f)
}

pub fn apply_k1(f: &LaurentPoly) -> LaurentPoly {
    f.shift(1).add(&f.shift(-1))
}

pub fn apply_word(w: &[Op], f: &LaurentPoly, values: &ParamValues) -> Result<LaurentPoly> {
    BasicRep::new(values).apply_word(w, f)
}

pub fn askey_wilson(n: u32, values: &ParamValues) -> Result<LaurentPoly> {
    BasicRep::new(values).askey_wilson(n)
}

pub fn shifted_qn(n: u32, values: &ParamValues) -> Result<LaurentPoly> {
    BasicRep::new(values).shifted_qn(n)
}

pub fn recurrence_coeffs(n: u32, values: &ParamValues) -> Result<(RatFunc, RatFunc)> {
    BasicRep::new(values).recurrence_coeffs(n)
}

pub fn casimir_apply(f: &LaurentPoly, values: &ParamValues) -> Result<LaurentPoly> {
    BasicRep::new(values).casimir_apply(f)
}

pub fn check_aw_relations_in_rep(max_degree: u32, values: &ParamValues) -> Result<Vec<LaurentPoly>> {
    BasicRep::new(values).check_aw_relations_in_rep(max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::rat;
    use crate::poly::Var;

    fn sym() -> BasicRep {
        BasicRep::new(&ParamValues::symbolic())
    }

    fn point() -> BasicRep {
        let v = ParamValues { q: rat(2, 7), a: rat(3, 5), b: rat(-4, 3), c: rat(5, 2), d: rat(7, 11) };
        BasicRep::new(&v)
    }

    #[test]
    fn dsym_of_constant() {
        let h = sym();
        let v = h.values();
        let expected = LaurentPoly::one().scale(&base(&Scalar::one().add(&v.u())));
        assert_eq!(h.apply_dsym(&LaurentPoly::one()).unwrap(), expected);
    }

    #[test]
    fn dsym_rejects_asymmetric_input() {
        let f = LaurentPoly::monomial(1, RatFunc::one());
        assert_eq!(sym().apply_dsym(&f), Err(Error::NotSymmetric));
    }

    #[test]
    fn dsym_keeps_degree_and_symmetry() {
        let h = sym();
        for k in 0..=4 {
            let g = h.apply_dsym(&LaurentPoly::sym_monomial(k)).unwrap();
            assert!(g.is_symmetric());
            assert!(g.degree() <= k as i32);
        }
    }

    #[test]
    fn k1_examples() {
        let h = sym();
        let m1 = LaurentPoly::sym_monomial(1);
        assert_eq!(h.apply_k1(&LaurentPoly::one()), m1);
        let expected = LaurentPoly::sym_monomial(2).add(&LaurentPoly::monomial(0, RatFunc::int(2)));
        assert_eq!(h.apply_k1(&m1), expected);
    }

    #[test]
    fn word_composes_right_to_left() {
        let h = sym();
        let f = LaurentPoly::one();
        assert_eq!(h.apply_word(&[], &f).unwrap(), f);
        let lam0 = h.eigenvalue(0);
        assert_eq!(h.apply_word(&[Op::K1, Op::K0], &f).unwrap(), LaurentPoly::sym_monomial(1).scale(&lam0));
    }

    #[test]
    fn pochhammer_small() {
        let q = RatFunc::var(Var::Q);
        let a = RatFunc::var(Var::A);
        let one = RatFunc::one();
        assert_eq!(qpochhammer(&a, 0, &q), one);
        assert_eq!(qpochhammer(&a, 1, &q), one.sub(&a));
        assert_eq!(qpochhammer(&a, 2, &q), one.sub(&a).mul(&one.sub(&a.mul(&q))));
    }

    #[test]
    fn p1_matches_eigen_projection() {
        // D_sym(z + 1/z) = alpha (z + 1/z) + delta, so the constant term of
        // P_1 is delta / (lambda_1 - lambda_0).
        let h = sym();
        let g = h.apply_dsym(&LaurentPoly::sym_monomial(1)).unwrap();
        let c0 = g.coeff(0).div(&h.eigenvalue(1).sub(&h.eigenvalue(0))).unwrap();
        let p1 = h.askey_wilson(1).unwrap();
        assert_eq!(p1, LaurentPoly::sym_monomial(1).add(&LaurentPoly::monomial(0, c0)));
    }

    #[test]
    fn low_order_eigenfunctions_symbolic() {
        let h = sym();
        for n in 0..=4 {
            assert!(h.eigen_residual(n).unwrap().is_zero(), "n = {n}");
        }
        for n in 0..=3 {
            let p = h.askey_wilson(n).unwrap();
            assert!(p.is_symmetric());
            assert!(p.coeff(n as i32).is_one());
            assert_eq!(h.apply_dsym(&p).unwrap(), p.scale(&h.eigenvalue(n)), "n = {n}");
        }
    }

    #[test]
    fn wrong_eigenvalue_leaves_residual() {
        let h = sym();
        let (p, _) = h.askey_wilson_parts(2).unwrap();
        let r = h.apply_dsym(&p).unwrap().sub(&p.scale(&h.eigenvalue(1)));
        assert!(!r.is_zero());
    }

    #[test]
    fn eigenfunctions_at_a_point() {
        let h = point();
        for n in 0..=8 {
            let p = h.askey_wilson(n).unwrap();
            assert!(p.coeff(n as i32).is_one());
            assert_eq!(h.apply_dsym(&p).unwrap(), p.scale(&h.eigenvalue(n)), "n = {n}");
        }
    }

    #[test]
    fn q1_expansion() {
        let h = sym();
        let (a, b) = (RatFunc::var(Var::A), RatFunc::var(Var::B));
        let abi = a.mul(&b).inv().unwrap();
        let expected = LaurentPoly::from_ascending(&[a.add(&b).mul(&abi).neg(), RatFunc::one()])
            .add(&LaurentPoly::monomial(-1, abi));
        assert_eq!(h.shifted_qn(1).unwrap(), expected);
        assert!(h.shifted_qn(0).unwrap().is_zero());
    }

    #[test]
    fn casimir_on_constants() {
        let h = sym();
        let k = h.constants();
        let one = LaurentPoly::one();
        assert_eq!(h.casimir_apply(&one).unwrap(), one.scale(&k.q0));
        let m1 = LaurentPoly::sym_monomial(1);
        assert_eq!(h.casimir_apply(&m1).unwrap(), m1.scale(&k.q0));
    }

    #[test]
    fn relations_and_perturbed_control() {
        let h = sym();
        for r in h.check_aw_relations_in_rep(2).unwrap() {
            assert!(r.is_zero());
        }
        let mut k = h.constants();
        k.b = k.b.add(&RatFunc::one());
        let r = h.relation_residuals_with(&LaurentPoly::sym_monomial(1), &k).unwrap();
        assert!(!r[0].is_zero());
    }

    #[test]
    fn jacobi_model_agrees() {
        let h = point();
        let f = LaurentPoly::sym_monomial(1);
        let w = [Op::K0, Op::K1, Op::K0];
        assert_eq!(h.apply_word_jacobi(&w, &f).unwrap(), h.apply_word(&w, &f).unwrap());
    }

    #[test]
    fn lines_cover_all_exponents() {
        let lines = LaurentPoly::sym_monomial(2).to_lines();
        assert_eq!(lines, ["-2: 1", "-1: 0", "0: 0", "1: 0", "2: 1"]);
    }
}
