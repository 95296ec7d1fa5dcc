use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{parse_signed_decimal, render_int, Ring};
use crate::error::Result;

/// The integers, with arbitrary-precision elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn name(&self) -> String {
        "bigint".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn embed(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn render(&self, a: &BigInt) -> String {
        render_int(a)
    }

    fn parse(&self, s: &str) -> Result<BigInt> {
        parse_signed_decimal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let z = IntegerRing;
        assert_eq!(z.add(&3.into(), &5.into()), BigInt::from(8));
        assert_eq!(z.mul(&6.into(), &7.into()), BigInt::from(42));
        assert_eq!(z.sub(&3.into(), &5.into()), BigInt::from(-2));
    }

    #[test]
    fn zero_renders_unsigned() {
        let z = IntegerRing;
        let minus_zero = z.neg(&z.zero());
        assert_eq!(z.render(&minus_zero), "0");
        assert_eq!(z.render(&BigInt::from(-42)), "-42");
    }
}
