use std::cell::Cell;

use num_bigint::BigInt;
use serde::Serialize;

use super::Ring;
use crate::error::Result;

/// Totals observed by a [`Counted`] ring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub multiplications: u64,
    pub additions: u64,
}

/// Wraps a ring and counts the multiplications and additions (subtractions
/// included) performed through it. Negation and integer embedding are not
/// counted.
///
/// The counters use interior mutability, so a `Counted` is not `Sync`: one
/// counter belongs to one computation at a time.
#[derive(Debug)]
pub struct Counted<R> {
    inner: R,
    multiplications: Cell<u64>,
    additions: Cell<u64>,
}

impl<R: Ring> Counted<R> {
    pub fn new(inner: R) -> Self {
        Counted {
            inner,
            multiplications: Cell::new(0),
            additions: Cell::new(0),
        }
    }

    pub fn counts(&self) -> OpCounts {
        OpCounts {
            multiplications: self.multiplications.get(),
            additions: self.additions.get(),
        }
    }

    pub fn reset(&self) {
        self.multiplications.set(0);
        self.additions.set(0);
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }
}

fn bump(cell: &Cell<u64>) {
    cell.set(cell.get() + 1);
}

impl<R: Ring> Ring for Counted<R> {
    type Elem = R::Elem;

    fn name(&self) -> String {
        self.inner.name()
    }

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> R::Elem {
        self.inner.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        bump(&self.additions);
        self.inner.add(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.inner.neg(a)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        bump(&self.additions);
        self.inner.sub(a, b)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        bump(&self.multiplications);
        self.inner.mul(a, b)
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }

    fn embed(&self, n: &BigInt) -> R::Elem {
        self.inner.embed(n)
    }

    fn render(&self, a: &R::Elem) -> String {
        self.inner.render(a)
    }

    fn parse(&self, s: &str) -> Result<R::Elem> {
        self.inner.parse(s)
    }

    fn check(&self, a: &R::Elem) -> Result<()> {
        self.inner.check(a)
    }
}
