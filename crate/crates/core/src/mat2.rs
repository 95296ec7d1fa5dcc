//! 2x2 matrices over a ring, and their powers through trace and determinant.

use crate::error::{Error, Result};
use crate::quadratic::{x_power, Engine, QuadParams};
use crate::ring::Ring;

/// Row-major `[[e11, e12], [e21, e22]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<E> {
    pub e11: E,
    pub e12: E,
    pub e21: E,
    pub e22: E,
}

impl<E: Clone> Mat2<E> {
    /// Builds a matrix after checking every entry belongs to `ring`.
    pub fn new<R: Ring<Elem = E>>(ring: &R, e11: E, e12: E, e21: E, e22: E) -> Result<Self> {
        for e in [&e11, &e12, &e21, &e22] {
            ring.check(e)?;
        }
        Ok(Mat2 { e11, e12, e21, e22 })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> E>(mut f: F) -> Self {
        Mat2 {
            e11: f(0, 0),
            e12: f(0, 1),
            e21: f(1, 0),
            e22: f(1, 1),
        }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat2::from_fn(|i, j| if i == j { ring.one() } else { ring.zero() })
    }

    /// The Fibonacci matrix `[[1, 1], [1, 0]]`.
    pub fn fibonacci<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat2::from_fn(|i, j| if i == 1 && j == 1 { ring.zero() } else { ring.one() })
    }

    pub fn entries(&self) -> [&E; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn map<F, T>(&self, mut f: F) -> Mat2<T>
    where
        F: FnMut(&E) -> T,
    {
        Mat2 {
            e11: f(&self.e11),
            e12: f(&self.e12),
            e21: f(&self.e21),
            e22: f(&self.e22),
        }
    }

    pub fn trace<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.add(&self.e11, &self.e22)
    }

    pub fn det<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.sub(
            &ring.mul(&self.e11, &self.e22),
            &ring.mul(&self.e12, &self.e21),
        )
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let dot = |a: &E, b: &E, c: &E, d: &E| ring.add(&ring.mul(a, b), &ring.mul(c, d));
        Mat2 {
            e11: dot(&self.e11, &other.e11, &self.e12, &other.e21),
            e12: dot(&self.e11, &other.e12, &self.e12, &other.e22),
            e21: dot(&self.e21, &other.e11, &self.e22, &other.e21),
            e22: dot(&self.e21, &other.e12, &self.e22, &other.e22),
        }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Mat2 {
            e11: ring.add(&self.e11, &other.e11),
            e12: ring.add(&self.e12, &other.e12),
            e21: ring.add(&self.e21, &other.e21),
            e22: ring.add(&self.e22, &other.e22),
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(|e| ring.mul(c, e))
    }

    /// `M^m` by square-and-multiply. `M^0 = I`.
    pub fn pow_naive<R: Ring<Elem = E>>(&self, ring: &R, m: u64) -> Self {
        let mut result = Mat2::identity(ring);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(ring, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ring, &base);
            }
        }
        result
    }

    /// `M^m = a*M + b*I` where `(a, b)` is the reduced form of `x^m` for
    /// `x^2 - tr(M) x + det(M) = 0`.
    pub fn pow_ch<R: Ring<Elem = E>>(&self, ring: &R, m: u64, engine: Engine) -> Result<Self> {
        let params = QuadParams {
            t: self.trace(ring),
            d: self.det(ring),
        };
        let form = x_power(ring, &params, m, engine)?;
        let scaled = self.scale(ring, &form.a);
        Ok(Mat2 {
            e11: ring.add(&scaled.e11, &form.b),
            e12: scaled.e12,
            e21: scaled.e21,
            e22: ring.add(&scaled.e22, &form.b),
        })
    }

    /// `a,b;c,d` with entries in the ring's rendering.
    pub fn render<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        format!(
            "{},{};{},{}",
            ring.render(&self.e11),
            ring.render(&self.e12),
            ring.render(&self.e21),
            ring.render(&self.e22)
        )
    }

    /// Parses `a,b;c,d`. Error positions are byte offsets into `s`.
    pub fn parse<R: Ring<Elem = E>>(ring: &R, s: &str) -> Result<Self> {
        let mut entries = Vec::with_capacity(4);
        let mut offset = 0;
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            let position = if rows.len() < 2 {
                s.len()
            } else {
                rows[0].len() + rows[1].len() + 1
            };
            return Err(Error::parse(
                position,
                format!("expected 2 rows separated by ';', found {}", rows.len()),
            ));
        }
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                let position = if cols.len() < 2 {
                    offset + row.len()
                } else {
                    offset + cols[0].len() + cols[1].len() + 1
                };
                return Err(Error::parse(
                    position,
                    format!("expected 2 entries separated by ',', found {}", cols.len()),
                ));
            }
            let mut col_offset = offset;
            for col in cols {
                entries.push(ring.parse(col).map_err(|e| e.offset(col_offset))?);
                col_offset += col.len() + 1;
            }
            offset += row.len() + 1;
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().expect("four entries");
        Ok(Mat2 {
            e11: next(),
            e12: next(),
            e21: next(),
            e22: next(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegerRing, ModRing};
    use num_bigint::BigInt;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2<BigInt> {
        Mat2 {
            e11: a.into(),
            e12: b.into(),
            e21: c.into(),
            e22: d.into(),
        }
    }

    #[test]
    fn trace_and_det() {
        let z = IntegerRing;
        let a = Mat2::fibonacci(&z);
        assert_eq!(a.trace(&z), BigInt::from(1));
        assert_eq!(a.det(&z), BigInt::from(-1));
        let i = Mat2::identity(&z);
        assert_eq!(i.trace(&z), BigInt::from(2));
        assert_eq!(i.det(&z), BigInt::from(1));
        assert_eq!(m(2, 1, 1, 1).trace(&z), BigInt::from(3));
        assert_eq!(m(2, 1, 1, 1).det(&z), BigInt::from(1));
    }

    #[test]
    fn products() {
        let z = IntegerRing;
        let a = Mat2::fibonacci(&z);
        assert_eq!(a.mul(&z, &a), m(2, 1, 1, 1));
        let x = m(3, -4, 7, 2);
        assert_eq!(x.mul(&z, &Mat2::identity(&z)), x);
        let swap = m(0, 1, 1, 0);
        assert_eq!(swap.mul(&z, &swap), Mat2::identity(&z));
    }

    #[test]
    fn naive_powers() {
        let z = IntegerRing;
        assert_eq!(Mat2::fibonacci(&z).pow_naive(&z, 5), m(8, 5, 5, 3));
        assert_eq!(m(3, -4, 7, 2).pow_naive(&z, 0), Mat2::identity(&z));
        assert_eq!(m(2, 0, 0, 3).pow_naive(&z, 3), m(8, 0, 0, 27));
    }

    #[test]
    fn cayley_hamilton_powers() {
        let z = IntegerRing;
        for e in Engine::ALL {
            assert_eq!(Mat2::fibonacci(&z).pow_ch(&z, 5, e).unwrap(), m(8, 5, 5, 3));
            assert_eq!(m(2, 1, 1, 1).pow_ch(&z, 2, e).unwrap(), m(5, 3, 3, 2));
            let x = m(-3, 8, 1, 6);
            assert_eq!(x.pow_ch(&z, 1, e).unwrap(), x);
        }
        assert_eq!(
            m(3, 1, 4, 1).pow_ch(&z, 0, Engine::Doubling).unwrap(),
            Mat2::identity(&z)
        );
        assert!(m(3, 1, 4, 1).pow_ch(&z, 0, Engine::Binomial).is_err());
    }

    #[test]
    fn parse_and_render() {
        let z = IntegerRing;
        let parsed = Mat2::parse(&z, "1,1;1,0").unwrap();
        assert_eq!(parsed, Mat2::fibonacci(&z));
        assert_eq!(Mat2::parse(&z, "-1, \u{2212}2;3,4").unwrap(), m(-1, -2, 3, 4));
        assert_eq!(parsed.render(&z), "1,1;1,0");

        let r = ModRing::new(7).unwrap();
        let x = Mat2::parse(&r, "8,-1;0,13").unwrap();
        assert_eq!(x.render(&r), "1 mod 7,6 mod 7;0 mod 7,6 mod 7");
        assert_eq!(Mat2::parse(&r, &x.render(&r)).unwrap(), x);
    }

    #[test]
    fn parse_errors_point_at_the_problem() {
        let z = IntegerRing;
        let pos = |s: &str| match Mat2::parse(&z, s).unwrap_err() {
            Error::Parse { position, .. } => position,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(pos("1,2;3,x"), 6);
        assert_eq!(pos("1,2,3;4,5"), 3);
        assert_eq!(pos("1,2"), 3);
        assert_eq!(pos("1,2;3"), 5);
        assert_eq!(pos("1,2;3,4;5,6"), 7);
        assert_eq!(pos("12a,2;3,4"), 2);
    }

    #[test]
    fn new_rejects_foreign_entries() {
        let r7 = ModRing::new(7).unwrap();
        let r11 = ModRing::new(11).unwrap();
        let bad = Mat2::new(&r7, r7.one(), r11.one(), r7.zero(), r7.one());
        assert!(bad.is_err());
    }
}
