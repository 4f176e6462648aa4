use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ratfunc::{FieldOp, RationalFunction};
use super::rational::Rational;

use crate::error::Error;

/// Element `Σ_d f_d(k) ε1^d` of the localized equivariant scalars, with
/// `ε2 = -k ε1`. Only nonzero terms are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GradedScalar {
    terms: BTreeMap<i64, RationalFunction>,
}

/// The named scalars `1, ε1, ε2, K_X = -ε1-ε2, c2(X) = ε1ε2`.
#[derive(Clone, Debug)]
pub struct GsConstants {
    pub one: GradedScalar,
    pub eps1: GradedScalar,
    pub eps2: GradedScalar,
    pub kx: GradedScalar,
    pub c2x: GradedScalar,
}

pub fn gs_constants() -> GsConstants {
    GsConstants {
        one: GradedScalar::one(),
        eps1: GradedScalar::eps1(),
        eps2: GradedScalar::eps2(),
        kx: GradedScalar::kx(),
        c2x: GradedScalar::c2x(),
    }
}

impl GradedScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::homogeneous(0, RationalFunction::one())
    }

    /// `f · ε1^degree`.
    pub fn homogeneous(degree: i64, f: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(degree, f);
        }
        GradedScalar { terms }
    }

    /// Degree-zero embedding of `Q(k)`.
    pub fn lift(f: &RationalFunction) -> Self {
        Self::homogeneous(0, f.clone())
    }

    pub fn eps1() -> Self {
        Self::homogeneous(1, RationalFunction::one())
    }

    pub fn eps2() -> Self {
        Self::homogeneous(1, RationalFunction::linear(0, -1))
    }

    /// Canonical class `K_X = -ε1 - ε2 = (k - 1) ε1`.
    pub fn kx() -> Self {
        Self::homogeneous(1, RationalFunction::linear(-1, 1))
    }

    /// `c2(X) = ε1 ε2 = -k ε1²`.
    pub fn c2x() -> Self {
        Self::homogeneous(2, RationalFunction::linear(0, -1))
    }

    /// Weight `a ε1 + b ε2 = (a - b k) ε1`.
    pub fn weight(a: i64, b: i64) -> Self {
        Self::homogeneous(1, RationalFunction::linear(a, -b))
    }

    pub fn terms(&self) -> &BTreeMap<i64, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((d, f))` when exactly one degree is present.
    pub fn as_homogeneous(&self) -> Option<(i64, &RationalFunction)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(d, f)| (*d, f))
        } else {
            None
        }
    }

    pub fn coefficient(&self, degree: i64) -> RationalFunction {
        self.terms
            .get(&degree)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    fn insert_add(terms: &mut BTreeMap<i64, RationalFunction>, d: i64, f: RationalFunction) {
        if f.is_zero() {
            return;
        }
        match terms.get_mut(&d) {
            Some(slot) => {
                let s = slot.add(&f);
                if s.is_zero() {
                    terms.remove(&d);
                } else {
                    *slot = s;
                }
            }
            None => {
                terms.insert(d, f);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (d, f) in &other.terms {
            Self::insert_add(&mut terms, *d, f.clone());
        }
        GradedScalar { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedScalar {
            terms: self.terms.iter().map(|(d, f)| (*d, f.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (d1, f1) in &self.terms {
            for (d2, f2) in &other.terms {
                Self::insert_add(&mut terms, d1 + d2, f1.mul(f2));
            }
        }
        GradedScalar { terms }
    }

    /// Division by a homogeneous nonzero scalar.
    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dd, g) = other
            .as_homogeneous()
            .ok_or_else(|| Error::NonHomogeneousDivisor(other.to_string()))?;
        let inv = g.recip()?;
        Ok(GradedScalar {
            terms: self
                .terms
                .iter()
                .map(|(d, f)| (d - dd, f.mul(&inv)))
                .collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        GradedScalar {
            terms: self.terms.iter().map(|(d, f)| (*d, f.scale(r))).collect(),
        }
    }

    pub fn scale_rf(&self, g: &RationalFunction) -> Self {
        if g.is_zero() {
            return Self::zero();
        }
        GradedScalar {
            terms: self.terms.iter().map(|(d, f)| (*d, f.mul(g))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Numeric value at `(ε1, ε2)` with `ε1 ≠ 0`, through `k = -ε2/ε1`.
    pub fn eval(&self, eps1: &Rational, eps2: &Rational) -> Result<Rational, Error> {
        if eps1.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = -(eps2 / eps1);
        let mut acc = Rational::zero();
        for (d, f) in &self.terms {
            let e = num_traits::pow::Pow::pow(eps1, *d as i32);
            acc += f.eval(&k)? * e;
        }
        Ok(acc)
    }
}

pub fn gs_arith(a: &GradedScalar, b: &GradedScalar, op: FieldOp) -> Result<GradedScalar, Error> {
    Ok(match op {
        FieldOp::Add => a.add(b),
        FieldOp::Sub => a.sub(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b)?,
    })
}

impl super::Coeff for GradedScalar {
    fn zero() -> Self {
        GradedScalar::zero()
    }
    fn one() -> Self {
        GradedScalar::one()
    }
    fn is_zero(&self) -> bool {
        GradedScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        GradedScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        GradedScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        GradedScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        GradedScalar::neg(self)
    }
    fn scale(&self, r: &Rational) -> Self {
        GradedScalar::scale(self, r)
    }
    fn from_ratfunc(f: &RationalFunction) -> Result<Self, Error> {
        Ok(GradedScalar::lift(f))
    }
}

impl fmt::Display for GradedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            match *d {
                0 => write!(f, "{cs}")?,
                _ => {
                    let power = if *d == 1 {
                        "ε1".to_string()
                    } else {
                        format!("ε1^{d}")
                    };
                    if c.is_one() {
                        write!(f, "{power}")?;
                    } else if c.as_constant().is_some() && !cs.contains('/') {
                        write!(f, "{cs}{power}")?;
                    } else {
                        write!(f, "({cs})·{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GsRepr {
    terms: BTreeMap<i64, RationalFunction>,
}

impl Serialize for GradedScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GsRepr {
            terms: self.terms.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GsRepr::deserialize(d)?;
        Ok(GradedScalar {
            terms: repr.terms.into_iter().filter(|(_, f)| !f.is_zero()).collect(),
        })
    }
}
