//! Exact algebra kernel for the rank-one double affine Hecke algebra of type
//! `(C1v, C1)`, Zhedanov's algebra `AW(3)` and its central extension, and the
//! Askey–Wilson polynomial representation.
//!
//! Coefficients live in `Q(q, a, b, c, d)`, optionally extended by a root of
//! `q^-1 abcd`. Equality of coefficients is decided exactly by canonical forms.

pub mod error;
pub mod ncalg;
pub mod params;
pub mod poly;
pub mod polyrep;
pub mod ratfunc;
pub mod scalar;

pub use error::{Error, Result};
pub use params::{Mode, ParamValues, Params, StructureConstants};
pub use poly::{Poly, Var};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
