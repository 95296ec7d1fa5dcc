use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{pow, Ring};
use crate::error::{Error, Result};

/// The monomial `T^t * D^d`.
///
/// Ordered graded-lexicographically: by total degree, then by the exponent of `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub t: u32,
    pub d: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t: 0, d: 0 };

    pub fn new(t: u32, d: u32) -> Self {
        Monomial { t, d }
    }

    pub fn degree(&self) -> u32 {
        self.t + self.d
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.t.cmp(&other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Z[T, D]`, stored sparsely. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(m, c);
        p
    }

    /// The generator `T`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), Monomial::new(1, 0))
    }

    /// The generator `D`.
    pub fn d() -> Self {
        Self::monomial(BigInt::one(), Monomial::new(0, 1))
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = BivariatePoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivariatePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(Monomial::new(ma.t + mb.t, ma.d + mb.d), ca * cb);
            }
        }
        out
    }

    /// Evaluates at `T = t`, `D = d` in any ring.
    pub fn eval<R: Ring + ?Sized>(&self, ring: &R, t: &R::Elem, d: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let term = ring.mul(
                &ring.embed(c),
                &ring.mul(&pow(ring, t, m.t as u64), &pow(ring, d, m.d as u64)),
            );
            acc = ring.add(&acc, &term);
        }
        acc
    }
}

impl fmt::Display for BivariatePoly {
    /// Graded-lex descending, e.g. `T^3 - 2*T*D + 5`; unit coefficients and
    /// zero exponents are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || *m == Monomial::ONE {
                factors.push(magnitude.to_string());
            }
            for (name, exp) in [("T", m.t), ("D", m.d)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BivariatePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyParser::new(s).parse()
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(src: &'a str) -> Self {
        PolyParser { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a decimal digit"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            Some('+') => {
                self.bump();
                Some(false)
            }
            _ => None,
        }
    }

    fn parse(mut self) -> Result<BivariatePoly> {
        let mut poly = BivariatePoly::zero();
        self.skip_ws();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            self.skip_ws();
            let (m, c) = self.term()?;
            poly.add_term(m, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some(_) => match self.sign() {
                    Some(neg) => negative = neg,
                    None => {
                        let c = self.peek().unwrap_or_default();
                        return Err(Error::parse(self.pos, format!("unexpected {c:?}")));
                    }
                },
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let digits = self.digits()?;
                    coeff *= digits.parse::<BigInt>().expect("validated digits");
                }
                Some(v @ ('T' | 'D')) => {
                    self.bump();
                    let mut exp = 1u32;
                    if self.peek() == Some('^') {
                        self.bump();
                        let at = self.pos;
                        exp = self
                            .digits()?
                            .parse()
                            .map_err(|_| Error::parse(at, "exponent out of range"))?;
                    }
                    if v == 'T' {
                        mono.t += exp;
                    } else {
                        mono.d += exp;
                    }
                }
                Some(c) => return Err(Error::parse(self.pos, format!("unexpected {c:?}"))),
                None => return Err(Error::parse(self.pos, "unexpected end of input")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

/// The universal ring `Z[T, D]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = BivariatePoly;

    fn name(&self) -> String {
        "Z[T,D]".to_string()
    }

    fn zero(&self) -> BivariatePoly {
        BivariatePoly::zero()
    }

    fn one(&self) -> BivariatePoly {
        BivariatePoly::constant(BigInt::one())
    }

    fn add(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.add(b)
    }

    fn neg(&self, a: &BivariatePoly) -> BivariatePoly {
        a.neg()
    }

    fn mul(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.mul(b)
    }

    fn is_zero(&self, a: &BivariatePoly) -> bool {
        a.is_zero()
    }

    fn embed(&self, n: &BigInt) -> BivariatePoly {
        BivariatePoly::constant(n.clone())
    }

    fn render(&self, a: &BivariatePoly) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<BivariatePoly> {
        s.parse()
    }

    fn check(&self, a: &BivariatePoly) -> Result<()> {
        match a.terms.iter().find(|(_, c)| c.is_zero()) {
            Some((m, _)) => Err(Error::ForeignElement {
                ring: self.name(),
                value: format!("stored zero coefficient at {m:?}"),
            }),
            None => Ok(()),
        }
    }
}
