use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;

/// Arbitrary-precision rational with positive, reduced denominator.
pub type Rational = BigRational;

/// Renders as `"p"` for integers and `"p/q"` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p"` or `"p/q"` with decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new((-3).into(), 2.into()));
        assert!(matches!(parse_rational("1/0"), Err(Error::DivisionByZero)));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn normalized_denominator() {
        let r = Rational::new(2.into(), (-4).into());
        assert_eq!(rational_to_string(&r), "-1/2");
        assert_eq!(rational_to_string(&int(0)), "0");
    }
}
