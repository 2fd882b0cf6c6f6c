//! Parameters `(q, a, b, c, d)`, the scalars derived from them, and random
//! admissible evaluation points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var, NVARS};
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;

/// Default horizon for the `q^m != 1` style exclusions.
pub const DEFAULT_GENERICITY_BOUND: u32 = 16;

/// Default number of random points for probabilistic equality.
pub const DEFAULT_TRIALS: usize = 8;

/// Upper end of the numerator/denominator range for random points.
pub const RANDOM_RANGE: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Specialized,
}

/// The five parameter values as coefficient scalars.
///
/// For the base parameters these are either indeterminates or rational
/// constants; shifted and dual parameter sets are arbitrary scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamValues {
    pub q: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

/// Validated parameters.
#[derive(Clone, Debug)]
pub struct Params {
    mode: Mode,
    assignments: Option<[BigRational; NVARS]>,
    genericity_bound: u32,
    values: ParamValues,
    sqrt: Option<Scalar>,
}

impl Params {
    pub fn symbolic() -> Self {
        make_params(Mode::Symbolic, None, DEFAULT_GENERICITY_BOUND).expect("symbolic is valid")
    }

    /// Specialized parameters from `(q, a, b, c, d)` given as `(num, den)` pairs.
    pub fn specialized(point: [(i64, i64); NVARS]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, (n, d)) in Var::ALL.iter().zip(point) {
            map.insert(v.name().to_string(), BigRational::new(n.into(), d.into()));
        }
        make_params(Mode::Specialized, Some(&map), DEFAULT_GENERICITY_BOUND)
    }

    pub fn from_point(point: &[BigRational; NVARS]) -> Result<Self> {
        let map = Var::ALL
            .iter()
            .zip(point.iter())
            .map(|(v, x)| (v.name().to_string(), x.clone()))
            .collect();
        make_params(Mode::Specialized, Some(&map), DEFAULT_GENERICITY_BOUND)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn assignments(&self) -> Option<&[BigRational; NVARS]> {
        self.assignments.as_ref()
    }

    pub fn genericity_bound(&self) -> u32 {
        self.genericity_bound
    }

    pub fn values(&self) -> &ParamValues {
        &self.values
    }

    /// Enables the root `s` of `q^-1 abcd`. At a specialized point whose
    /// `q^-1 abcd` is a rational square, `s` is that rational root.
    pub fn with_extension(mut self) -> Self {
        let u = self.values.u();
        let s = match u.as_rational() {
            Some(r) => match rational_sqrt(&r) {
                Some(root) => Scalar::rational(&root),
                None => Scalar::sqrt_symbol(u.base().clone()),
            },
            None => Scalar::sqrt_symbol(u.base().clone()),
        };
        self.sqrt = Some(s);
        self
    }

    /// The adjoined root `s`, if enabled.
    pub fn sqrt(&self) -> Result<&Scalar> {
        self.sqrt.as_ref().ok_or(Error::ExtensionDisabled)
    }

    /// A short human-readable description of the parameter point.
    pub fn echo(&self) -> String {
        match &self.assignments {
            None => "symbolic".to_string(),
            Some(pt) => Var::ALL
                .iter()
                .zip(pt.iter())
                .map(|(v, x)| format!("{}={}", v.name(), x))
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Validates and builds parameters.
pub fn make_params(
    mode: Mode,
    assignments: Option<&BTreeMap<String, BigRational>>,
    genericity_bound: u32,
) -> Result<Params> {
    match mode {
        Mode::Symbolic => {
            if assignments.is_some_and(|a| !a.is_empty()) {
                return Err(Error::UnexpectedAssignment);
            }
            Ok(Params {
                mode,
                assignments: None,
                genericity_bound,
                values: ParamValues::symbolic(),
                sqrt: None,
            })
        }
        Mode::Specialized => {
            let map = assignments.ok_or_else(|| Error::MissingAssignment("q".into()))?;
            let mut point: [BigRational; NVARS] = Default::default();
            for v in Var::ALL {
                point[v.index()] = map
                    .get(v.name())
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.name().into()))?;
            }
            check_admissible(&point, genericity_bound)?;
            let values = ParamValues::at_point(&point);
            Ok(Params { mode, assignments: Some(point), genericity_bound, values, sqrt: None })
        }
    }
}

/// Checks the genericity conditions up to the horizon `bound`, plus `ab != 1`.
pub fn check_admissible(point: &[BigRational; NVARS], bound: u32) -> Result<()> {
    let degenerate = |clause: &str, m: i64| Error::DegenerateParameters { clause: clause.into(), m };
    let [q, a, b, c, d] = point;
    let one = BigRational::one();
    if q.is_zero() {
        return Err(degenerate("q != 0", 0));
    }
    let mut qm = one.clone();
    for m in 1..=bound {
        qm *= q;
        if qm == one {
            return Err(degenerate("q^m != 1", m as i64));
        }
    }
    for (name, x) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if x.is_zero() {
            return Err(degenerate(&format!("{name} != 0"), 0));
        }
    }
    let mut t = a * b * c * d;
    for m in 0..=bound {
        if t == one {
            return Err(degenerate("abcd q^m != 1", m as i64));
        }
        t *= q;
    }
    if a * b == one {
        return Err(degenerate("ab != 1", 0));
    }
    Ok(())
}

/// A uniformly random admissible point; each coordinate is `n/d` with
/// `n, d` uniform in `[1, RANDOM_RANGE]`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> [BigRational; NVARS] {
    loop {
        let point: [BigRational; NVARS] = std::array::from_fn(|_| {
            let n = rng.gen_range(1..=RANDOM_RANGE);
            let d = rng.gen_range(1..=RANDOM_RANGE);
            BigRational::new(BigInt::from(n), BigInt::from(d))
        });
        if check_admissible(&point, bound).is_ok() {
            return point;
        }
    }
}

/// Random-evaluation identity test: `x == y` at `trials` random admissible
/// points. Points where either side has a vanishing denominator are resampled.
pub fn probably_equal<R: Rng + ?Sized>(x: &Scalar, y: &Scalar, trials: usize, rng: &mut R) -> bool {
    let mut done = 0;
    let mut attempts = 0;
    while done < trials {
        attempts += 1;
        if attempts > 100 * trials.max(1) {
            return false;
        }
        let pt = random_point(rng, DEFAULT_GENERICITY_BOUND);
        match (x.eval_parts(&pt), y.eval_parts(&pt)) {
            (Some(vx), Some(vy)) => {
                if vx != vy {
                    return false;
                }
                done += 1;
            }
            _ => continue,
        }
    }
    true
}

/// `e1..e4` and the structure constants of the AW(3) relations, their
/// central extension, and the Casimir value.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub e1: Scalar,
    pub e2: Scalar,
    pub e3: Scalar,
    pub e4: Scalar,
    pub b: Scalar,
    pub c0: Scalar,
    pub c1: Scalar,
    pub d0: Scalar,
    pub d1: Scalar,
    pub e: Scalar,
    pub f0: Scalar,
    pub f1: Scalar,
    pub g: Scalar,
    pub q0: Scalar,
}

fn sum(xs: &[Scalar]) -> Scalar {
    xs.iter().fold(Scalar::zero(), |acc, x| acc.add(x))
}

fn prod(xs: &[&Scalar]) -> Scalar {
    xs.iter().fold(Scalar::one(), |acc, x| acc.mul(x))
}

impl ParamValues {
    pub fn symbolic() -> Self {
        ParamValues {
            q: Scalar::var(Var::Q),
            a: Scalar::var(Var::A),
            b: Scalar::var(Var::B),
            c: Scalar::var(Var::C),
            d: Scalar::var(Var::D),
        }
    }

    pub fn at_point(point: &[BigRational; NVARS]) -> Self {
        ParamValues {
            q: Scalar::rational(&point[0]),
            a: Scalar::rational(&point[1]),
            b: Scalar::rational(&point[2]),
            c: Scalar::rational(&point[3]),
            d: Scalar::rational(&point[4]),
        }
    }

    /// `(qa, qb, c, d)`.
    pub fn shifted(&self) -> Self {
        ParamValues {
            q: self.q.clone(),
            a: self.q.mul(&self.a),
            b: self.q.mul(&self.b),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// `(s, ab/s, ac/s, ad/s)` for a root `s` of `q^-1 abcd`.
    pub fn dual(&self, s: &Scalar) -> Result<Self> {
        let si = s.inv()?;
        Ok(ParamValues {
            q: self.q.clone(),
            a: s.clone(),
            b: prod(&[&self.a, &self.b, &si]),
            c: prod(&[&self.a, &self.c, &si]),
            d: prod(&[&self.a, &self.d, &si]),
        })
    }

    fn as_array(&self) -> [&Scalar; NVARS] {
        [&self.q, &self.a, &self.b, &self.c, &self.d]
    }

    /// Evaluates a polynomial in `q, a, b, c, d` at these values.
    pub fn eval_poly(&self, p: &Poly) -> Scalar {
        let vals = self.as_array();
        let mut powers: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]; NVARS];
        let mut acc = Scalar::zero();
        for (mono, coef) in p.terms() {
            let mut t = Scalar::from(RatFunc::from_poly(Poly::constant(coef.clone())));
            for (v, &e) in mono.0.iter().enumerate() {
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(vals[v]);
                    powers[v].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[v][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes these values for `q, a, b, c, d` in a coefficient. An
    /// adjoined root, if present, is kept as it is.
    pub fn substitute(&self, x: &Scalar) -> Result<Scalar> {
        let ev = |r: &RatFunc| -> Result<Scalar> {
            self.eval_poly(r.numer()).div(&self.eval_poly(r.denom()))
        };
        let base = ev(x.base())?;
        if !x.has_s() {
            return Ok(base);
        }
        let root = Scalar::sqrt_symbol(x.s_square().clone());
        Ok(base.add(&ev(&x.s_coeff())?.mul(&root)))
    }

    pub fn qinv(&self) -> Scalar {
        self.q.inv().expect("q != 0")
    }

    pub fn ab(&self) -> Scalar {
        self.a.mul(&self.b)
    }

    pub fn cd(&self) -> Scalar {
        self.c.mul(&self.d)
    }

    pub fn abcd(&self) -> Scalar {
        self.ab().mul(&self.cd())
    }

    /// `q^-1 abcd`.
    pub fn u(&self) -> Scalar {
        self.abcd().mul(&self.qinv())
    }

    pub fn elementary_symmetric(&self) -> (Scalar, Scalar, Scalar, Scalar) {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let e1 = sum(&[a.clone(), b.clone(), c.clone(), d.clone()]);
        let e2 = sum(&[a * b, a * c, b * c, a * d, b * d, c * d]);
        let e3 = sum(&[prod(&[a, b, c]), prod(&[a, b, d]), prod(&[a, c, d]), prod(&[b, c, d])]);
        let e4 = prod(&[a, b, c, d]);
        (e1, e2, e3, e4)
    }

    /// `lambda_n = q^-n + abcd q^(n-1)`.
    pub fn eigenvalue(&self, n: u32) -> Scalar {
        let n = n as i32;
        let qn = self.q.pow(-n).expect("q != 0");
        qn.add(&self.abcd().mul(&self.q.pow(n - 1).expect("q != 0")))
    }

    pub fn structure_constants(&self) -> StructureConstants {
        let q = &self.q;
        let qi = self.qinv();
        let one = Scalar::one();
        let int = Scalar::int;
        let pw = |x: &Scalar, e: i32| x.pow(e).expect("q != 0");
        let (e1, e2, e3, e4) = self.elementary_symmetric();
        let one_m_q = one.sub(q);
        let one_m_qi = one.sub(&qi);
        let q_m_qi = q.sub(&qi);

        let b = prod(&[&one_m_qi, &one_m_qi, &e3.add(&q.mul(&e1))]);
        let c0 = q_m_qi.mul(&q_m_qi);
        let c1 = prod(&[&qi, &c0, &e4]);
        // -q^-3 (1-q)^2 (1+q)
        let d_pref = prod(&[&pw(q, -3), &one_m_q, &one_m_q, &one.add(q)]).neg();
        let d0 = d_pref.mul(&sum(&[e4.clone(), q.mul(&e2), q.mul(q)]));
        let d1 = d_pref.mul(&e1.mul(&e4).add(&q.mul(&e3)));

        let cube = prod(&[&one_m_q, &one_m_q, &one_m_q]);
        let (a, bb, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let cd = self.cd();
        let ab = self.ab();
        let apb = a.add(bb);
        let cpd = c.add(d);
        let e = prod(&[&pw(q, -2), &cube, &cpd]).neg();
        let f_pref = prod(&[&pw(q, -3), &cube, &one.add(q)]);
        let f0 = f_pref.mul(&cd.add(q));
        let f1 = prod(&[&f_pref, &apb, &cd]);
        let q2 = q.mul(q);
        let g_inner = sum(&[
            // (a+b)(c+d)(cd(q^2+1)+q)
            prod(&[&apb, &cpd, &cd.mul(&q2.add(&one)).add(q)]),
            // -q(ab+1)((c^2+d^2)(q+1) - cd)
            prod(&[
                q,
                &ab.add(&one),
                &c.mul(c).add(&d.mul(d)).mul(&q.add(&one)).sub(&cd),
            ])
            .neg(),
            // (cd + e4)(q^2+1)
            cd.add(&e4).mul(&q2.add(&one)),
            // (e2 + e4 - ab) q^3
            sum(&[e2.clone(), e4.clone(), ab.neg()]).mul(&pw(q, 3)),
        ]);
        let g = prod(&[&pw(q, -4), &cube, &g_inner]).neg();

        let q0_inner = sum(&[
            pw(q, 4).mul(&e4.sub(&e2)),
            pw(q, 3).mul(&sum(&[e1.mul(&e1), e1.mul(&e3).neg(), int(-2).mul(&e2)])),
            q2.mul(&sum(&[e2.mul(&e4), int(2).mul(&e4), e2.clone()])).neg(),
            q.mul(&sum(&[e3.mul(&e3), int(-2).mul(&e2).mul(&e4), e1.mul(&e3).neg()])),
            e4.mul(&one.sub(&e2)),
        ]);
        let q0 = prod(&[&pw(q, -4), &one_m_q, &one_m_q, &q0_inner]);

        StructureConstants { e1, e2, e3, e4, b, c0, c1, d0, d1, e, f0, f1, g, q0 }
    }
}

/// The four elementary symmetric polynomials of `a, b, c, d`.
pub fn elementary_symmetric(params: &Params) -> (Scalar, Scalar, Scalar, Scalar) {
    params.values().elementary_symmetric()
}

pub fn structure_constants(params: &Params) -> StructureConstants {
    params.values().structure_constants()
}

pub fn eigenvalue(n: u32, params: &Params) -> Scalar {
    params.values().eigenvalue(n)
}

/// Convenience: a rational-function scalar from a rational number.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::from(RatFunc::from_rational(&BigRational::new(n.into(), d.into())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_params_always_valid() {
        let p = make_params(Mode::Symbolic, None, 16).unwrap();
        assert_eq!(p.mode(), Mode::Symbolic);
        assert_eq!(elementary_symmetric(&p).3.to_string(), "a*b*c*d");
    }

    #[test]
    fn q_equal_one_is_degenerate() {
        let err = Params::specialized([(1, 1), (2, 1), (2, 1), (2, 1), (2, 1)]).unwrap_err();
        assert_eq!(err, Error::DegenerateParameters { clause: "q^m != 1".into(), m: 1 });
    }

    #[test]
    fn root_of_unity_detected_at_its_order() {
        let err = Params::specialized([(-1, 1), (2, 1), (3, 1), (5, 1), (7, 1)]).unwrap_err();
        assert_eq!(err, Error::DegenerateParameters { clause: "q^m != 1".into(), m: 2 });
    }

    #[test]
    fn abcd_clause_and_ab_clause() {
        // abcd = 1/4, q = 2: abcd q^2 = 1
        let err = Params::specialized([(2, 1), (1, 2), (1, 1), (1, 2), (1, 1)]).unwrap_err();
        assert_eq!(err, Error::DegenerateParameters { clause: "abcd q^m != 1".into(), m: 2 });
        let err = Params::specialized([(2, 1), (3, 1), (1, 3), (5, 1), (7, 1)]).unwrap_err();
        assert_eq!(err, Error::DegenerateParameters { clause: "ab != 1".into(), m: 0 });
    }

    #[test]
    fn missing_assignment() {
        let mut map = BTreeMap::new();
        map.insert("q".to_string(), BigRational::from_integer(2.into()));
        let err = make_params(Mode::Specialized, Some(&map), 16).unwrap_err();
        assert_eq!(err, Error::MissingAssignment("a".into()));
        assert_eq!(make_params(Mode::Specialized, None, 16).unwrap_err(), Error::MissingAssignment("q".into()));
    }

    #[test]
    fn generic_point_is_valid() {
        Params::specialized([(3, 2), (2, 1), (1, 3), (5, 1), (7, 1)]).unwrap();
    }

    #[test]
    fn elementary_symmetric_values() {
        // ab = 1 is excluded by validation, so build the values directly
        let ones = [3, 1, 1, 1, 1].map(|n| BigRational::new(n.into(), if n == 3 { 2.into() } else { 1.into() }));
        let (e1, e2, e3, e4) = ParamValues::at_point(&ones).elementary_symmetric();
        assert_eq!([e1, e2, e3, e4], [4, 6, 4, 1].map(Scalar::int));
        let p = Params::specialized([(3, 2), (2, 1), (3, 1), (5, 1), (7, 1)]).unwrap();
        let (e1, e2, e3, e4) = elementary_symmetric(&p);
        // direct expansion: 2+3+5+7; 6+10+15+14+21+35; 30+42+70+105; 210
        assert_eq!([e1, e2, e3, e4], [17, 101, 247, 210].map(Scalar::int));
    }

    #[test]
    fn c0_values() {
        let sc = structure_constants(&Params::symbolic());
        let q = Scalar::var(Var::Q);
        let qmqi = q.sub(&q.inv().unwrap());
        assert_eq!(sc.c0, qmqi.mul(&qmqi));
        let p = Params::specialized([(2, 1), (5, 1), (3, 1), (11, 1), (13, 1)]).unwrap();
        assert_eq!(structure_constants(&p).c0, rat(9, 4));
    }

    #[test]
    fn eigenvalues_low_order() {
        let v = ParamValues::symbolic();
        let one = Scalar::one();
        assert_eq!(v.eigenvalue(0), one.add(&v.u()));
        assert_eq!(v.eigenvalue(1), v.qinv().add(&v.abcd()));
    }

    #[test]
    fn eigenvalues_distinct_at_generic_point() {
        let p = Params::specialized([(3, 2), (2, 1), (1, 3), (5, 1), (7, 1)]).unwrap();
        let l: Vec<Scalar> = (0..=20).map(|n| eigenvalue(n, &p)).collect();
        for m in 0..l.len() {
            for n in m + 1..l.len() {
                assert_ne!(l[m], l[n], "lambda_{m} == lambda_{n}");
            }
        }
    }

    #[test]
    fn extension_at_square_point_is_rational() {
        // abcd/q = 4 -> s = 2
        let p = Params::specialized([(1, 3), (4, 3), (1, 1), (1, 1), (1, 1)]).unwrap().with_extension();
        assert_eq!(p.sqrt().unwrap(), &Scalar::int(2));
        let p = Params::specialized([(3, 2), (2, 1), (1, 3), (5, 1), (7, 1)]).unwrap().with_extension();
        let s = p.sqrt().unwrap();
        assert!(s.has_s());
        assert_eq!(s.mul(s), rat(140, 9));
    }
}
