//! Exact arithmetic: rationals, polynomials in `k`, the field `Q(k)` and
//! graded equivariant scalars.
//!
//! The equivariant parameters `(ε1, ε2)` never appear as two independent
//! variables. Every scalar is a finite sum `Σ_d f_d(k) ε1^d` with
//! `ε2 = -k ε1`, so all we ever need is univariate arithmetic over `Q`.

mod graded;
mod poly;
mod ratfunc;
mod rational;

pub use graded::{gs_arith, gs_constants, GradedScalar, GsConstants};
pub use poly::Poly;
pub use ratfunc::{rf_arith, FieldOp, RationalFunction};
pub use rational::{parse_rational, rational_to_string, Rational};

use crate::error::Error;

/// Coefficient ring for sparse symmetric-function expansions.
///
/// Implemented by [`Rational`], [`RationalFunction`] and [`GradedScalar`].
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Embeds an element of `Q(k)`. Fails for [`Rational`] unless the
    /// function is a constant.
    fn from_ratfunc(f: &RationalFunction) -> Result<Self, Error>;

    fn from_rational(r: &Rational) -> Self {
        Self::one().scale(r)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_ratfunc(f: &RationalFunction) -> Result<Self, Error> {
        f.as_constant()
            .ok_or_else(|| Error::NotConstant(f.to_string()))
    }
}
