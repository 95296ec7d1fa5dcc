use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_signed_decimal, render_int, Ring};
use crate::error::{Error, Result};

/// An exact rational, always stored in lowest terms with a positive denominator.
pub type RationalValue = BigRational;

/// The field of rationals, used here only through its ring operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalRing;

impl Ring for RationalRing {
    type Elem = RationalValue;

    fn name(&self) -> String {
        "rational".to_string()
    }

    fn zero(&self) -> RationalValue {
        BigRational::zero()
    }

    fn one(&self) -> RationalValue {
        BigRational::one()
    }

    fn add(&self, a: &RationalValue, b: &RationalValue) -> RationalValue {
        a + b
    }

    fn neg(&self, a: &RationalValue) -> RationalValue {
        -a
    }

    fn sub(&self, a: &RationalValue, b: &RationalValue) -> RationalValue {
        a - b
    }

    fn mul(&self, a: &RationalValue, b: &RationalValue) -> RationalValue {
        a * b
    }

    fn is_zero(&self, a: &RationalValue) -> bool {
        a.is_zero()
    }

    fn embed(&self, n: &BigInt) -> RationalValue {
        BigRational::from_integer(n.clone())
    }

    /// `p/q` in lowest terms; integers render without the denominator.
    fn render(&self, a: &RationalValue) -> String {
        if a.denom().is_one() {
            render_int(a.numer())
        } else {
            format!("{}/{}", render_int(a.numer()), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<RationalValue> {
        match s.split_once('/') {
            None => Ok(self.embed(&parse_signed_decimal(s)?)),
            Some((p, q)) => {
                let numer = parse_signed_decimal(p)?;
                let offset = p.len() + 1;
                let denom = parse_signed_decimal(q).map_err(|e| e.offset(offset))?;
                if denom.is_zero() {
                    return Err(Error::parse(offset, "zero denominator"));
                }
                Ok(BigRational::new(numer, denom))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> RationalValue {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn products_are_reduced() {
        let r = RationalRing;
        let product = r.mul(&q(1, 2), &q(2, 3));
        assert_eq!(product, q(1, 3));
        assert_eq!(product.numer(), &BigInt::from(1));
        assert_eq!(product.denom(), &BigInt::from(3));
    }

    #[test]
    fn denominators_stay_positive() {
        let x = q(3, -6);
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(RationalRing.render(&x), "-1/2");
    }

    #[test]
    fn parse_forms() {
        let r = RationalRing;
        assert_eq!(r.parse("4/6").unwrap(), q(2, 3));
        assert_eq!(r.parse("-5").unwrap(), q(-5, 1));
        assert!(matches!(
            r.parse("1/0").unwrap_err(),
            Error::Parse { position: 2, .. }
        ));
        assert!(matches!(
            r.parse("1/x").unwrap_err(),
            Error::Parse { position: 2, .. }
        ));
    }
}
