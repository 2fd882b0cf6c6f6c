//! Coefficient scalars: rational functions, optionally extended by a square
//! root `s` with `s^2 = q^-1 abcd` (or its value at a specialized point).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Var, NVARS};
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug)]
struct SPart {
    coeff: RatFunc,
    square: Arc<RatFunc>,
}

/// `base + coeff * s`; the `s` part is absent unless the extension is in use.
#[derive(Clone, Debug, Default)]
pub struct Scalar {
    base: RatFunc,
    s: Option<Box<SPart>>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.s_coeff_ref() == other.s_coeff_ref()
    }
}

impl Eq for Scalar {}

impl From<RatFunc> for Scalar {
    fn from(base: RatFunc) -> Self {
        Scalar { base, s: None }
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        RatFunc::one().into()
    }

    pub fn int(n: i64) -> Self {
        RatFunc::int(n).into()
    }

    pub fn rational(r: &BigRational) -> Self {
        RatFunc::from_rational(r).into()
    }

    pub fn var(v: Var) -> Self {
        RatFunc::var(v).into()
    }

    /// The adjoined root itself, given the value of its square.
    pub fn sqrt_symbol(square: RatFunc) -> Self {
        Scalar {
            base: RatFunc::zero(),
            s: Some(Box::new(SPart { coeff: RatFunc::one(), square: Arc::new(square) })),
        }
    }

    fn s_coeff_ref(&self) -> Option<&RatFunc> {
        self.s.as_ref().map(|p| &p.coeff).filter(|c| !c.is_zero())
    }

    pub fn base(&self) -> &RatFunc {
        &self.base
    }

    pub fn s_coeff(&self) -> RatFunc {
        self.s_coeff_ref().cloned().unwrap_or_default()
    }

    pub fn has_s(&self) -> bool {
        self.s_coeff_ref().is_some()
    }

    /// The value of `s^2`; panics if the adjoined root is not in use.
    pub fn s_square(&self) -> &RatFunc {
        self.square().expect("no adjoined root")
    }

    fn square(&self) -> Option<&Arc<RatFunc>> {
        self.s.as_ref().map(|p| &p.square)
    }

    fn build(base: RatFunc, coeff: RatFunc, square: Option<&Arc<RatFunc>>) -> Self {
        if coeff.is_zero() {
            return base.into();
        }
        let square = square.expect("s part present without its square").clone();
        Scalar { base, s: Some(Box::new(SPart { coeff, square })) }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && !self.has_s()
    }

    pub fn is_one(&self) -> bool {
        self.base.is_one() && !self.has_s()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.has_s() {
            return None;
        }
        self.base.as_rational()
    }

    pub fn canonicalize(&self) -> Self {
        Scalar::build(
            self.base.canonicalize(),
            self.s_coeff().canonicalize(),
            self.square(),
        )
    }

    pub fn neg(&self) -> Self {
        Scalar::build(self.base.neg(), self.s_coeff().neg(), self.square())
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if !self.has_s() && !other.has_s() {
            return self.base.add(&other.base).into();
        }
        let sq = self.square().or(other.square());
        Scalar::build(self.base.add(&other.base), self.s_coeff().add(&other.s_coeff()), sq)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        match (self.s_coeff_ref(), other.s_coeff_ref()) {
            (None, None) => self.base.mul(&other.base).into(),
            (Some(x), None) => Scalar::build(
                self.base.mul(&other.base),
                x.mul(&other.base),
                self.square(),
            ),
            (None, Some(y)) => Scalar::build(
                self.base.mul(&other.base),
                self.base.mul(y),
                other.square(),
            ),
            (Some(x), Some(y)) => {
                let sq = self.square().unwrap();
                let base = self.base.mul(&other.base).add(&x.mul(y).mul(sq));
                let coeff = self.base.mul(y).add(&x.mul(&other.base));
                Scalar::build(base, coeff, Some(sq))
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self.s_coeff_ref() {
            None => Ok(self.base.inv()?.into()),
            Some(x) => {
                // (r + x s)^-1 = (r - x s) / (r^2 - x^2 s^2)
                let sq = self.square().unwrap();
                let norm = self.base.mul(&self.base).sub(&x.mul(x).mul(sq));
                let inv = norm.inv()?;
                Ok(Scalar::build(self.base.mul(&inv), x.neg().mul(&inv), Some(sq)))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Evaluates the two components `(base, s-coefficient)` at a rational point.
    pub fn eval_parts(&self, point: &[BigRational; NVARS]) -> Option<(BigRational, BigRational)> {
        Some((self.base.eval(point)?, self.s_coeff().eval(point)?))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s_coeff_ref() {
            None => write!(f, "{}", self.base),
            Some(x) => {
                if self.base.is_zero() {
                    write!(f, "({})*s", x)
                } else {
                    write!(f, "({}) + ({})*s", self.base, x)
                }
            }
        }
    }
}

/// Guards arithmetic that would leave the base field.
pub fn require_extension(enabled: bool) -> Result<()> {
    if enabled {
        Ok(())
    } else {
        Err(Error::ExtensionDisabled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_square() -> RatFunc {
        let abcd = [Var::A, Var::B, Var::C, Var::D]
            .iter()
            .fold(RatFunc::one(), |acc, &v| acc.mul(&RatFunc::var(v)));
        abcd.div(&RatFunc::var(Var::Q)).unwrap()
    }

    #[test]
    fn s_squared_reduces() {
        let s = Scalar::sqrt_symbol(sym_square());
        let r = s.mul(&s).sub(&sym_square().into());
        assert!(r.is_zero());
    }

    #[test]
    fn inverse_in_extension() {
        let s = Scalar::sqrt_symbol(sym_square());
        let x = Scalar::var(Var::A).add(&s.mul(&Scalar::var(Var::C)));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        assert!(s.inv().unwrap().mul(&s).is_one());
    }
}
