use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::rational::{int, parse_rational, rational_to_string, Rational};

use crate::error::Error;

/// Element of `Q(k)` in canonical form: `gcd(num, den) = 1`, `den` monic.
/// Zero is `0/1`. Two equal functions are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lead.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Self::from_poly(Poly::k())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// `a + b k` with integer `a, b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(Poly::from_ints(&[a, b]))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        // a/b + c/d = (a d' + c b') / (b' d) with g = gcd(b, d), b = b' g, d = d' g;
        // only g can share factors with the new numerator.
        let g = self.den.gcd(&other.den);
        let b1 = self.den.exact_div(&g);
        let d1 = other.den.exact_div(&g);
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&other.den);
        let h = num.gcd(&g);
        RationalFunction {
            num: num.exact_div(&h),
            den: den.exact_div(&h),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        RationalFunction {
            num: self.num.exact_div(&g1).mul(&other.num.exact_div(&g2)),
            den: self.den.exact_div(&g2).mul(&other.den.exact_div(&g1)),
        }
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at a rational point; fails where the denominator vanishes.
    pub fn eval(&self, k: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::PoleAt(rational_to_string(k)));
        }
        Ok(self.num.eval(k) / d)
    }
}

/// Elementary field operations, as used by the `rf_arith` entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(
    a: &RationalFunction,
    b: &RationalFunction,
    op: FieldOp,
) -> Result<RationalFunction, Error> {
    Ok(match op {
        FieldOp::Add => a.add(b),
        FieldOp::Sub => a.sub(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b)?,
    })
}

impl super::Coeff for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn scale(&self, r: &Rational) -> Self {
        RationalFunction::scale(self, r)
    }
    fn from_ratfunc(f: &RationalFunction) -> Result<Self, Error> {
        Ok(f.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.is_monomial() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        let clear = self
            .den
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let clear = Rational::from_integer(clear);
        write!(
            f,
            "{}/{}",
            wrap(&self.num.scale(&clear)),
            wrap(&self.den.scale(&clear))
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RfRepr {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let dump = |p: &Poly| p.coeffs().iter().map(rational_to_string).collect();
        RfRepr {
            num: dump(&self.num),
            den: dump(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RfRepr::deserialize(d)?;
        let load = |v: &[String]| -> Result<Poly, Error> {
            Ok(Poly::from_coeffs(
                v.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?,
            ))
        };
        let num = load(&repr.num).map_err(serde::de::Error::custom)?;
        let den = load(&repr.den).map_err(serde::de::Error::custom)?;
        RationalFunction::new(num, den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> RationalFunction {
        RationalFunction::k()
    }

    #[test]
    fn rf_arith_examples() {
        assert_eq!(
            rf_arith(&k(), &k(), FieldOp::Add).unwrap(),
            RationalFunction::linear(0, 2)
        );
        // 2k/(1+k) * (1+k)/2 = k
        let a = RationalFunction::new(Poly::from_ints(&[0, 2]), Poly::from_ints(&[1, 1])).unwrap();
        let b = RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::from_int(2)).unwrap();
        assert_eq!(rf_arith(&a, &b, FieldOp::Mul).unwrap(), k());
        let zero = k().sub(&k());
        assert!(matches!(
            rf_arith(&RationalFunction::one(), &zero, FieldOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(a, RationalFunction::linear(1, 1));
        let b = RationalFunction::new(Poly::from_ints(&[2]), Poly::from_ints(&[-2, -2])).unwrap();
        assert_eq!(b.den(), &Poly::from_ints(&[1, 1]));
        assert_eq!(b.num(), &Poly::from_ints(&[-1]));
    }

    #[test]
    fn display_and_json() {
        let a = RationalFunction::new(Poly::from_int(2), Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(a.to_string(), "2/(1+k)");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"num":["2"],"den":["1","1"]}"#);
        let back: RationalFunction =
            serde_json::from_str(r#"{"num":["4"],"den":["2","2"]}"#).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["1"],"den":[]}"#).is_err());
    }

    #[test]
    fn eval_pole() {
        let a = RationalFunction::new(Poly::one(), Poly::from_ints(&[-1, 1])).unwrap();
        assert!(a.eval(&int(1)).is_err());
        assert_eq!(a.eval(&int(3)).unwrap(), Rational::new(1.into(), 2.into()));
    }
}
