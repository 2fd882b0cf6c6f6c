//! Reduced fractions of integer polynomials in `q, a, b, c, d`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Poly, Var, NVARS};

/// An element of `Q(q, a, b, c, d)` in canonical form.
///
/// The numerator and denominator are coprime, the denominator has a positive
/// leading coefficient, and zero is `0/1`. Two values are equal iff their
/// canonical forms are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Self {
        RatFunc::from_poly(Poly::constant(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_parts(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
            .expect("rational has nonzero denominator")
    }

    /// Canonicalizes `num / den`.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_coeff().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        RatFunc { num: n, den: d }
    }

    /// Re-runs canonicalization; a no-op on values built through this API.
    pub fn canonicalize(&self) -> Self {
        RatFunc::reduce(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let combine = |x: &Poly, y: &Poly| if negate { x.sub(y) } else { x.add(y) };
        if self.den == other.den {
            let n = combine(&self.num, &other.num);
            if self.den.is_one() {
                return RatFunc { num: n, den: Poly::one() };
            }
            return RatFunc::reduce(n, self.den.clone());
        }
        // Henrici: only the gcd of the denominators can cancel.
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = combine(&self.num.mul(&other.den), &other.num.mul(&self.den));
            if n.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc { num: n, den: self.den.mul(&other.den) };
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let t = combine(&self.num.mul(&d2), &other.num.mul(&d1));
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&t, &g);
        let num = t.div_exact(&g2).expect("gcd divides");
        let den = d1.mul(&other.den.div_exact(&g2).expect("gcd divides"));
        RatFunc { num, den }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: Poly::one() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Value at a rational point, or `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap_num = self.num.len() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if let Some(c) = self.den.as_constant() {
            if c.is_one() {
                return write!(f, "{}", self.num);
            }
        }
        let n = if wrap_num { format!("({})", self.num) } else { self.num.to_string() };
        let d = self.den.to_string();
        let d = if d.contains(['*', ' ']) { format!("({d})") } else { d };
        write!(f, "{}/{}", n, d)
    }
}
