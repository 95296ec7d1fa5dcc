use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

use super::{parse_signed_decimal, Ring};
use crate::error::{Error, Result};

/// A residue class modulo `modulus`, stored canonically in `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModValue {
    residue: u64,
    modulus: u64,
}

impl ModValue {
    pub fn new(value: &BigInt, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        let magnitude = (value.magnitude() % modulus)
            .to_u64()
            .expect("remainder below a u64 modulus");
        let residue = if value.sign() == Sign::Minus && magnitude != 0 {
            modulus - magnitude
        } else {
            magnitude
        };
        Ok(ModValue { residue, modulus })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn same_modulus(&self, other: &Self) -> Result<u64> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let n = self.same_modulus(other)?;
        let sum = (self.residue as u128 + other.residue as u128) % n as u128;
        Ok(ModValue {
            residue: sum as u64,
            modulus: n,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let n = self.same_modulus(other)?;
        let product = (self.residue as u128 * other.residue as u128) % n as u128;
        Ok(ModValue {
            residue: product as u64,
            modulus: n,
        })
    }

    pub fn neg(&self) -> Self {
        let residue = if self.residue == 0 {
            0
        } else {
            self.modulus - self.residue
        };
        ModValue {
            residue,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for ModValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// `Z / nZ` for a modulus `2 <= n < 2^64`.
///
/// # Panics
///
/// Arithmetic panics on elements carrying a different modulus. Use
/// [`Ring::check`] (which [`crate::QuadParams::new`] and
/// [`crate::Mat2::new`] call) or the `try_*` methods on [`ModValue`] to get an
/// error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModRing {
    modulus: u64,
}

impl ModRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(ModRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn elem(&self, residue: u64) -> ModValue {
        ModValue {
            residue,
            modulus: self.modulus,
        }
    }
}

impl Ring for ModRing {
    type Elem = ModValue;

    fn name(&self) -> String {
        format!("mod({})", self.modulus)
    }

    fn zero(&self) -> ModValue {
        self.elem(0)
    }

    fn one(&self) -> ModValue {
        self.elem(1)
    }

    fn add(&self, a: &ModValue, b: &ModValue) -> ModValue {
        a.try_add(b).expect("modulus mismatch")
    }

    fn neg(&self, a: &ModValue) -> ModValue {
        a.neg()
    }

    fn sub(&self, a: &ModValue, b: &ModValue) -> ModValue {
        a.try_sub(b).expect("modulus mismatch")
    }

    fn mul(&self, a: &ModValue, b: &ModValue) -> ModValue {
        a.try_mul(b).expect("modulus mismatch")
    }

    fn embed(&self, n: &BigInt) -> ModValue {
        ModValue::new(n, self.modulus).expect("modulus validated at construction")
    }

    fn render(&self, a: &ModValue) -> String {
        a.to_string()
    }

    /// Accepts a signed integer (reduced into range) or the rendered form `r mod n`.
    fn parse(&self, s: &str) -> Result<ModValue> {
        let (value_part, modulus_part) = match s.find(" mod ") {
            Some(i) => (&s[..i], Some((i + 5, &s[i + 5..]))),
            None => (s, None),
        };
        let value = parse_signed_decimal(value_part)?;
        if let Some((offset, text)) = modulus_part {
            let n = parse_signed_decimal(text).map_err(|e| e.offset(offset))?;
            if n != BigInt::from(self.modulus) {
                return Err(Error::parse(
                    offset,
                    format!("modulus {n} does not match {}", self.modulus),
                ));
            }
        }
        Ok(self.embed(&value))
    }

    fn check(&self, a: &ModValue) -> Result<()> {
        if a.modulus != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: a.modulus,
            });
        }
        if a.residue >= a.modulus {
            return Err(Error::ForeignElement {
                ring: self.name(),
                value: a.residue.to_string(),
            });
        }
        Ok(())
    }
}
