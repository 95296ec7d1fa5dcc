//! Commutative rings with identity.
//!
//! A [`Ring`] is a ring *instance*: it owns whatever context its elements need
//! (a modulus, for example) and performs all arithmetic. Every algorithm in
//! this crate is written once against this trait and runs unchanged over the
//! integers, residues, rationals, and the universal polynomial ring `Z[T, D]`.
//!
//! Division is not part of the contract.

mod counter;
mod integer;
mod modular;
mod poly;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use counter::{Counted, OpCounts};
pub use integer::IntegerRing;
pub use modular::{ModRing, ModValue};
pub use poly::{BivariatePoly, Monomial, PolyRing};
pub use rational::{RationalRing, RationalValue};

pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// Short human-readable name of the instance, e.g. `bigint` or `mod(7)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// The image of an integer under the canonical map `Z -> R`.
    ///
    /// The default builds `n * 1` by double-and-add over the bits of `|n|`,
    /// which only uses the ring operations. Instances with a cheaper direct
    /// construction override it; both must agree.
    fn embed(&self, n: &BigInt) -> Self::Elem {
        embed_by_doubling(self, n)
    }

    fn embed_i64(&self, n: i64) -> Self::Elem {
        self.embed(&BigInt::from(n))
    }

    /// Canonical text rendering; [`Ring::parse`] accepts it back.
    fn render(&self, a: &Self::Elem) -> String;

    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Checks that `a` is a well-formed element of this instance.
    fn check(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }
}

/// `n * 1` computed with additions only (double-and-add, most significant bit first).
pub fn embed_by_doubling<R: Ring + ?Sized>(ring: &R, n: &BigInt) -> R::Elem {
    let one = ring.one();
    let mut acc = ring.zero();
    let magnitude = n.magnitude();
    for i in (0..magnitude.bits()).rev() {
        acc = ring.add(&acc, &acc);
        if magnitude.bit(i) {
            acc = ring.add(&acc, &one);
        }
    }
    if n.is_negative() {
        ring.neg(&acc)
    } else {
        acc
    }
}

/// `a^e` by square-and-multiply; `a^0` is one.
pub fn pow<R: Ring + ?Sized>(ring: &R, a: &R::Elem, e: u64) -> R::Elem {
    let mut result = ring.one();
    if e == 0 {
        return result;
    }
    let mut base = a.clone();
    let mut e = e;
    loop {
        if e & 1 == 1 {
            result = ring.mul(&result, &base);
        }
        e >>= 1;
        if e == 0 {
            return result;
        }
        base = ring.mul(&base, &base);
    }
}

/// Parses an optionally signed decimal integer. Accepts `-` and the Unicode
/// minus sign `−` as a leading sign and an optional leading `+`.
pub fn parse_signed_decimal(s: &str) -> Result<BigInt> {
    let trimmed = s.trim_start();
    let lead = s.len() - trimmed.len();
    let trimmed = trimmed.trim_end();
    let (negative, digits, sign_len) = if let Some(rest) = trimmed.strip_prefix('-') {
        (true, rest, 1)
    } else if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
        (true, rest, '\u{2212}'.len_utf8())
    } else if let Some(rest) = trimmed.strip_prefix('+') {
        (false, rest, 1)
    } else {
        (false, trimmed, 0)
    };
    if digits.is_empty() {
        return Err(Error::parse(lead + sign_len, "expected a decimal digit"));
    }
    if let Some((i, c)) = digits.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(Error::parse(
            lead + sign_len + i,
            format!("unexpected character {c:?} in integer"),
        ));
    }
    let value: BigInt = digits
        .parse()
        .map_err(|_| Error::parse(lead, "invalid integer"))?;
    Ok(if negative { -value } else { value })
}

/// Renders a big integer, writing zero without a sign.
pub(crate) fn render_int(n: &BigInt) -> String {
    if n.is_zero() {
        "0".to_string()
    } else {
        n.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_minus_signs() {
        assert_eq!(parse_signed_decimal("-12").unwrap(), BigInt::from(-12));
        assert_eq!(parse_signed_decimal("\u{2212}12").unwrap(), BigInt::from(-12));
        assert_eq!(parse_signed_decimal("+7").unwrap(), BigInt::from(7));
        assert_eq!(parse_signed_decimal(" 40 ").unwrap(), BigInt::from(40));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            parse_signed_decimal("12x4").unwrap_err(),
            Error::parse(2, "unexpected character 'x' in integer")
        );
        assert!(matches!(
            parse_signed_decimal("-").unwrap_err(),
            Error::Parse { position: 1, .. }
        ));
        assert!(matches!(
            parse_signed_decimal("").unwrap_err(),
            Error::Parse { position: 0, .. }
        ));
    }

    #[test]
    fn doubling_embedding_matches_direct() {
        let modular = ModRing::new(1_000_000_007).unwrap();
        let rationals = RationalRing;
        let polys = PolyRing;
        for n in [-1_000_003i64, -17, -1, 0, 1, 2, 255, 1 << 40] {
            let n = BigInt::from(n);
            assert_eq!(embed_by_doubling(&IntegerRing, &n), IntegerRing.embed(&n));
            assert_eq!(embed_by_doubling(&modular, &n), modular.embed(&n));
            assert_eq!(embed_by_doubling(&rationals, &n), rationals.embed(&n));
            assert_eq!(embed_by_doubling(&polys, &n), polys.embed(&n));
        }
    }

    #[test]
    fn pow_small_cases() {
        let z = IntegerRing;
        assert_eq!(pow(&z, &BigInt::from(3), 0), BigInt::from(1));
        assert_eq!(pow(&z, &BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(pow(&z, &BigInt::from(-2), 7), BigInt::from(-128));
    }
}
