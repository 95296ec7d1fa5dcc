//! Fibonacci and Lucas numbers as the case `(t, d) = (1, -1)`, the `F_{nm}`
//! expansion in powers of `L_n`, and the link between `P_m` and Chebyshev
//! polynomials of the second kind.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::quadratic::{binomial, companion, p_m, p_m_doubling, Engine, QuadParams};
use crate::report::{Check, Report};
use crate::ring::{pow, IntegerRing, ModRing, ModValue, RationalRing, Ring};

/// Relative tolerance of the floating-point Chebyshev check.
pub const CHEBYSHEV_REL_TOL: f64 = 1e-9;

fn fib_params<R: Ring>(ring: &R) -> QuadParams<R::Elem> {
    QuadParams {
        t: ring.one(),
        d: ring.embed_i64(-1),
    }
}

/// `F_n`, exact.
pub fn fib(n: u64) -> BigInt {
    p_m_doubling(&IntegerRing, &fib_params(&IntegerRing), n)
}

/// `F_n` through a chosen engine.
pub fn fib_with(n: u64, engine: Engine) -> Result<BigInt> {
    p_m(&IntegerRing, &fib_params(&IntegerRing), n, engine)
}

/// `F_n mod modulus`.
pub fn fib_mod(n: u64, modulus: u64, engine: Engine) -> Result<ModValue> {
    let ring = ModRing::new(modulus)?;
    p_m(&ring, &fib_params(&ring), n, engine)
}

/// `L_n`, the companion sequence at `(1, -1)`.
pub fn lucas(n: u64) -> BigInt {
    companion(&IntegerRing, &fib_params(&IntegerRing), n).v
}

pub fn lucas_mod(n: u64, modulus: u64) -> Result<ModValue> {
    let ring = ModRing::new(modulus)?;
    Ok(companion(&ring, &fib_params(&ring), n).v)
}

/// `F_n` and `F_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibPair {
    pub f: BigInt,
    pub f_next: BigInt,
}

impl FibPair {
    pub fn at(n: u64) -> Self {
        let state = companion(&IntegerRing, &fib_params(&IntegerRing), n);
        // F_{n+1} = (F_n + L_n) / 2
        FibPair {
            f_next: (&state.u + &state.v) / 2,
            f: state.u,
        }
    }

    pub fn step(&self) -> Self {
        FibPair {
            f: self.f_next.clone(),
            f_next: &self.f + &self.f_next,
        }
    }
}

fn check_nm(n: u64, m: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::precondition("fibnm", "n >= 1"));
    }
    if m == 0 {
        return Err(Error::precondition("fibnm", "m >= 1"));
    }
    Ok(())
}

/// The signed summands `C(m-1-i, i) L_n^(m-1-2i) (-1)^(i(n+1))` of the `F_{nm}`
/// expansion, in order of increasing `i`.
pub fn fib_nm_terms(n: u64, m: u64) -> Result<Vec<BigInt>> {
    check_nm(n, m)?;
    let l = lucas(n);
    let z = IntegerRing;
    let top = m - 1;
    let odd_n = n % 2 == 1;
    Ok((0..=top / 2)
        .map(|i| {
            let term = binomial(top - i, i) * pow(&z, &l, top - 2 * i);
            if !odd_n && i % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .collect())
}

/// `F_{nm}` from `F_n` and `L_n` via the binomial expansion.
///
/// The sum is accumulated by Horner's rule in `L_n^2`:
/// `L^r * (((c_0) L^2 + c_1 s) L^2 + c_2 s^2 ...)` with `r = (m-1) mod 2` and
/// `s = (-1)^(n+1)`.
pub fn fib_nm_identity(n: u64, m: u64) -> Result<BigInt> {
    check_nm(n, m)?;
    let l = lucas(n);
    let l_sq = &l * &l;
    let top = m - 1;
    let last = top / 2;
    let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };

    let mut acc = BigInt::zero();
    let mut binom = BigInt::one();
    let mut sign_pow = BigInt::one();
    for i in 0..=last {
        acc = acc * &l_sq + &binom * &sign_pow;
        if i < last {
            // C(top-i, i) -> C(top-i-1, i+1)
            binom = binom * (top - 2 * i) * (top - 2 * i - 1) / ((top - i) * (i + 1));
            sign_pow *= &sign;
        }
    }
    if top % 2 == 1 {
        acc *= &l;
    }
    Ok(fib(n) * acc)
}

/// Checks `A^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]]`, `tr(A^n) = L_n` and
/// `det(A^n) = (-1)^n` with `A^n` computed by repeated squaring.
pub fn fib_matrix_check(n: u64) -> Result<Report> {
    if n == 0 {
        return Err(Error::precondition("fib_matrix_check", "n >= 1"));
    }
    let z = IntegerRing;
    let power = Mat2::fibonacci(&z).pow_naive(&z, n);
    let (prev, cur, next) = (fib(n - 1), fib(n), fib(n + 1));
    let parity = if n.is_multiple_of(2) { 1 } else { -1 };
    Ok(Report::from_iter([
        Check::new(format!("A^{n}[1,1] = F_{}", n + 1), &next, &power.e11),
        Check::new(format!("A^{n}[1,2] = F_{n}"), &cur, &power.e12),
        Check::new(format!("A^{n}[2,1] = F_{n}"), &cur, &power.e21),
        Check::new(format!("A^{n}[2,2] = F_{}", n - 1), &prev, &power.e22),
        Check::new(format!("tr(A^{n}) = L_{n}"), lucas(n), power.trace(&z)),
        Check::new(format!("det(A^{n}) = (-1)^{n}"), parity, power.det(&z)),
    ]))
}

/// `U_k`, coefficients in ascending powers of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebUPoly {
    coeffs: Vec<BigRational>,
}

impl ChebUPoly {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonempty")
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

/// `U_0 = 1`, `U_1 = 2x`, `U_{k+1} = 2x U_k - U_{k-1}`.
pub fn chebyshev_u(k: u64) -> ChebUPoly {
    let two = BigRational::from_integer(2.into());
    let mut prev = vec![BigRational::one()];
    if k == 0 {
        return ChebUPoly { coeffs: prev };
    }
    let mut cur = vec![BigRational::zero(), two.clone()];
    for _ in 1..k {
        let mut next = vec![BigRational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &two * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    ChebUPoly { coeffs: cur }
}

/// `U_k(x)` in floating point by the three-term recurrence.
pub fn chebyshev_u_f64(k: u64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact check of `P_m(t, s^2) = s^(m-1) U_{m-1}(t / (2s))` over the rationals.
pub fn verify_chebyshev_relation(t: &BigInt, s: &BigInt, m: u64) -> Result<Report> {
    if !s.is_positive() {
        return Err(Error::precondition("chebyshev relation", "s >= 1"));
    }
    if m == 0 {
        return Err(Error::precondition("chebyshev relation", "m >= 1"));
    }
    let z = IntegerRing;
    let d = s * s;
    let lhs = BigRational::from_integer(p_m_doubling(&z, &QuadParams { t: t.clone(), d: d.clone() }, m));
    let x = BigRational::new(t.clone(), s * 2);
    let scale = BigRational::from_integer(pow(&z, s, m - 1));
    let rhs = scale * chebyshev_u(m - 1).eval(&x);
    let q = RationalRing;
    Ok(Report::from_iter([Check::new(
        format!("P_{m}({t},{d}) = {s}^{} U_{}({})", m - 1, m - 1, q.render(&x)),
        q.render(&lhs),
        q.render(&rhs),
    )]))
}

/// Floating-point check of `P_m(t, d) = d^((m-1)/2) U_{m-1}(t / (2 sqrt d))`.
///
/// The left side is computed exactly from the binary values of `t` and `d`
/// and rounded once; the right side uses `sqrt` and the `f64` recurrence.
/// Passes when the relative error is within [`CHEBYSHEV_REL_TOL`].
pub fn verify_chebyshev_numeric(t: f64, d: f64, m: u64) -> Result<Report> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::precondition("numeric chebyshev relation", "d > 0"));
    }
    if !t.is_finite() {
        return Err(Error::precondition("numeric chebyshev relation", "finite t"));
    }
    if m == 0 {
        return Err(Error::precondition("numeric chebyshev relation", "m >= 1"));
    }
    let lhs = p_m_of_floats(t, d, m).to_f64().unwrap_or(f64::NAN);
    let root = d.sqrt();
    let rhs = root.powi((m - 1) as i32) * chebyshev_u_f64(m - 1, t / (2.0 * root));
    let err = relative_error(lhs, rhs);
    Ok(Report::from_iter([Check::judged(
        format!("P_{m}({t},{d}) ~ d^((m-1)/2) U_{}(t/(2 sqrt d)) within {CHEBYSHEV_REL_TOL:e}", m - 1),
        lhs,
        format!("{rhs} (rel err {err:.3e})"),
        err <= CHEBYSHEV_REL_TOL,
    )]))
}

/// `P_m(t, d)` exactly for float inputs. Floats are dyadic, so scaling by
/// `2^k` turns `(t, d)` into the integers `(2^k t, 4^k d)`, and
/// `P_m(2^k t, 4^k d) = 2^(k(m-1)) P_m(t, d)` undoes the scaling at the end.
fn p_m_of_floats(t: f64, d: f64, m: u64) -> BigRational {
    let t = BigRational::from_float(t).expect("finite");
    let d = BigRational::from_float(d).expect("finite");
    let twos = |q: &BigRational| q.denom().trailing_zeros().unwrap_or(0);
    let k = twos(&t).max(twos(&d).div_ceil(2));
    let scaled = QuadParams {
        t: (t.numer() << (k - twos(&t))),
        d: (d.numer() << (2 * k - twos(&d))),
    };
    let value = p_m_doubling(&IntegerRing, &scaled, m);
    BigRational::new(value, BigInt::one() << (k * (m - 1)))
}

/// `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub fn relative_error(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn float_inputs_are_evaluated_exactly() {
        use crate::quadratic::p_m_iterative;
        for (t, d) in [(0.1, 2.75), (-3.5, 0.5), (7.0, 1e-3), (0.0, 9.0)] {
            let params = QuadParams {
                t: BigRational::from_float(t).unwrap(),
                d: BigRational::from_float(d).unwrap(),
            };
            for m in 1..=20 {
                assert_eq!(
                    p_m_of_floats(t, d, m),
                    p_m_iterative(&RationalRing, &params, m),
                    "({t},{d}) m={m}"
                );
            }
        }
    }

    #[test]
    fn fibonacci_and_lucas_values() {
        assert_eq!(fib(0), BigInt::from(0));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(12), BigInt::from(144));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(3), BigInt::from(4));
        assert_eq!(lucas(10), BigInt::from(123));
        assert_eq!(fib_mod(10, 7, Engine::Doubling).unwrap().residue(), 6);
        assert_eq!(lucas_mod(10, 100).unwrap().residue(), 23);
        assert!(fib_with(0, Engine::Binomial).is_err());
    }

    #[test]
    fn fib_pairs_step() {
        let mut pair = FibPair::at(0);
        for n in 0..40 {
            assert_eq!(pair, FibPair::at(n));
            assert!(pair.f_next >= pair.f);
            pair = pair.step();
        }
    }

    #[test]
    fn nm_identity_examples() {
        assert_eq!(fib_nm_identity(3, 4).unwrap(), BigInt::from(144));
        assert_eq!(fib_nm_identity(2, 3).unwrap(), BigInt::from(8));
        assert_eq!(fib_nm_identity(7, 1).unwrap(), fib(7));
        assert_eq!(
            fib_nm_terms(3, 4).unwrap(),
            vec![BigInt::from(64), BigInt::from(8)]
        );
        assert_eq!(
            fib_nm_terms(2, 3).unwrap(),
            vec![BigInt::from(9), BigInt::from(-1)]
        );
    }

    #[test]
    fn nm_identity_rejects_zero() {
        assert!(fib_nm_identity(0, 3).is_err());
        assert!(fib_nm_identity(3, 0).is_err());
        assert!(fib_nm_terms(0, 0).is_err());
    }

    #[test]
    fn matrix_check_examples() {
        for n in [1, 2, 10] {
            let report = fib_matrix_check(n).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.len(), 6);
        }
        let r10 = fib_matrix_check(10).unwrap();
        assert_eq!(r10.checks[4].actual, "123");
        assert_eq!(r10.checks[5].actual, "1");
        assert!(fib_matrix_check(0).is_err());
    }

    #[test]
    fn chebyshev_polys() {
        assert_eq!(chebyshev_u(0).coeffs(), &[q(1)]);
        assert_eq!(chebyshev_u(1).coeffs(), &[q(0), q(2)]);
        assert_eq!(chebyshev_u(2).coeffs(), &[q(-1), q(0), q(4)]);
        for k in 0..20 {
            let u = chebyshev_u(k);
            assert_eq!(u.degree() as u64, k);
            assert_eq!(u.leading(), &q(1 << k));
            assert_eq!(u.eval(&q(1)), q(k as i64 + 1));
        }
    }

    #[test]
    fn chebyshev_relation_examples() {
        for t in -5..=5 {
            assert!(verify_chebyshev_relation(&t.into(), &1.into(), 3).unwrap().passed());
        }
        let r = verify_chebyshev_relation(&4.into(), &2.into(), 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].actual, "4");
        assert!(verify_chebyshev_relation(&1.into(), &1.into(), 1).unwrap().passed());
        assert!(verify_chebyshev_relation(&1.into(), &0.into(), 1).is_err());
    }

    #[test]
    fn numeric_relation() {
        assert!(verify_chebyshev_numeric(2.5, 3.7, 20).unwrap().passed());
        assert!(verify_chebyshev_numeric(1.0, 0.0, 3).is_err());
        assert!(verify_chebyshev_numeric(1.0, -2.0, 3).is_err());
    }
}
