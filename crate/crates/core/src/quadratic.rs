//! Powers of a generator `x` satisfying `x^2 - t*x + d = 0`.
//!
//! Every power reduces to `x^m = P_m(t, d) * x - d * P_{m-1}(t, d)` where
//! `P_0 = 0`, `P_1 = 1`, `P_{m+1} = t*P_m - d*P_{m-1}`. Three independent
//! engines compute `P_m`:
//!
//! | engine      | method                                  | ring mults     |
//! |-------------|-----------------------------------------|----------------|
//! | `Iterative` | the three-term recurrence (reference)   | `2(m - 1)`     |
//! | `Binomial`  | `sum C(m-1-i, i) t^(m-1-2i) (-d)^i`     | `O(m)`         |
//! | `Doubling`  | index-doubling ladder on `(U, V, d^k)`  | `<= 7 log2 m + 2` |
//!
//! # Sign convention
//!
//! | here           | classical Lucas sequences `U_m(P, Q)`, `V_m(P, Q)` |
//! |----------------|----------------------------------------------------|
//! | `t`            | `P`                                                |
//! | `d`            | `Q`                                                |
//! | `P_m(t, d)`    | `U_m(t, d)`                                        |
//! | companion `v`  | `V_m(t, d)`                                        |
//! | `(t, d) = (1, -1)` | Fibonacci `F_m` and Lucas `L_m`                |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{BivariatePoly, Monomial, PolyRing, Ring};

/// The pair `(t, d)` of the relation `x^2 - t*x + d = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadParams<E> {
    pub t: E,
    pub d: E,
}

impl<E: Clone> QuadParams<E> {
    /// Checks that both parameters belong to `ring`.
    pub fn new<R: Ring<Elem = E>>(ring: &R, t: E, d: E) -> Result<Self> {
        ring.check(&t)?;
        ring.check(&d)?;
        Ok(QuadParams { t, d })
    }
}

impl QuadParams<BivariatePoly> {
    /// The generic parameters `(T, D)` in `Z[T, D]`.
    pub fn universal() -> Self {
        QuadParams {
            t: BivariatePoly::t(),
            d: BivariatePoly::d(),
        }
    }
}

/// `a * x + b`, the reduced form of a power of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm<E> {
    pub a: E,
    pub b: E,
}

/// Doubling state at index `k`: `u = P_k`, `v = V_k`, `dpow = d^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionPair<E> {
    pub u: E,
    pub v: E,
    pub dpow: E,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Iterative,
    Binomial,
    #[default]
    Doubling,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Iterative, Engine::Binomial, Engine::Doubling];

    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Iterative => "iterative",
            Engine::Binomial => "binomial",
            Engine::Doubling => "doubling",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iterative" => Ok(Engine::Iterative),
            "binomial" => Ok(Engine::Binomial),
            "doubling" => Ok(Engine::Doubling),
            other => Err(Error::parse(0, format!("unknown engine {other:?}"))),
        }
    }
}

/// `P_m(t, d)` by the recurrence, `m - 1` steps. This is the reference engine.
pub fn p_m_iterative<R: Ring>(ring: &R, params: &QuadParams<R::Elem>, m: u64) -> R::Elem {
    if m == 0 {
        return ring.zero();
    }
    iterate(ring, params, m).1
}

/// `(P_{m-1}, P_m)` for `m >= 1`.
fn iterate<R: Ring>(ring: &R, params: &QuadParams<R::Elem>, m: u64) -> (R::Elem, R::Elem) {
    let mut prev = ring.zero();
    let mut cur = ring.one();
    for _ in 1..m {
        let next = ring.sub(&ring.mul(&params.t, &cur), &ring.mul(&params.d, &prev));
        prev = std::mem::replace(&mut cur, next);
    }
    (prev, cur)
}

/// `P_m(t, d)` from the closed binomial sum. Defined for `m >= 1` only.
pub fn p_m_binomial<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
) -> Result<R::Elem> {
    if m == 0 {
        return Err(Error::precondition("binomial engine", "m >= 1"));
    }
    let top = m - 1;
    let last = top / 2;

    // t^0 ..= t^top
    let mut t_pows = Vec::with_capacity(top as usize + 1);
    t_pows.push(ring.one());
    for k in 1..=top as usize {
        t_pows.push(ring.mul(&t_pows[k - 1], &params.t));
    }

    let neg_d = ring.neg(&params.d);
    let mut neg_d_pow = ring.one();
    let mut binom = BigInt::one(); // C(top - i, i)
    let mut acc = ring.zero();
    for i in 0..=last {
        let coeff = ring.embed(&binom);
        let term = ring.mul(&coeff, &ring.mul(&t_pows[(top - 2 * i) as usize], &neg_d_pow));
        acc = ring.add(&acc, &term);
        if i < last {
            binom = next_diagonal_binomial(&binom, top - i, i);
            neg_d_pow = ring.mul(&neg_d_pow, &neg_d);
        }
    }
    Ok(acc)
}

/// Steps `C(n, k)` to `C(n - 1, k + 1)` exactly:
/// `C(n-1, k+1) = C(n, k) * (n-k) * (n-k-1) / (n * (k+1))`.
fn next_diagonal_binomial(binom: &BigInt, n: u64, k: u64) -> BigInt {
    let mut next = binom * (n - k);
    next *= n - k - 1;
    match n.checked_mul(k + 1) {
        Some(denom) => {
            debug_assert!((&next % denom).is_zero());
            next / denom
        }
        None => next / n / (k + 1),
    }
}

/// `P_m(t, d)` in `O(log m)` ring multiplications.
pub fn p_m_doubling<R: Ring>(ring: &R, params: &QuadParams<R::Elem>, m: u64) -> R::Elem {
    companion(ring, params, m).u
}

/// The doubling state `(P_m, V_m, d^m)` at index `m`.
pub fn companion<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
) -> CompanionPair<R::Elem> {
    ladder(ring, params, m, false, |_, _| {}).0
}

/// Like [`companion`], additionally reporting every state the ladder passes
/// through as `(index, state)`.
pub fn companion_states<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
) -> Vec<(u64, CompanionPair<R::Elem>)> {
    let mut states = Vec::new();
    ladder(ring, params, m, false, |k, s| states.push((k, s.clone())));
    states
}

/// Walks the bits of `m` from the top keeping the states at `k` and `k + 1`.
///
/// With `U`, `V` the two Lucas sequences and `d^k` carried alongside:
///
/// ```text
/// U_2k   = U_k V_k                V_2k   = V_k^2 - 2 d^k
/// U_2k+1 = U_k+1 V_k - d^k        V_2k+1 = V_k+1 V_k - t d^k
/// U_2k+2 = U_k+1 V_k+1            V_2k+2 = V_k+1^2 - 2 d^k+1
/// ```
///
/// Each bit needs two of the three, at most 7 multiplications. Returns the
/// state at `m`, and the state at `m + 1` when `want_next` is set (for `m >= 2`
/// it comes for free).
fn ladder<R, F>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
    want_next: bool,
    mut visit: F,
) -> (CompanionPair<R::Elem>, Option<CompanionPair<R::Elem>>)
where
    R: Ring,
    F: FnMut(u64, &CompanionPair<R::Elem>),
{
    let (t, d) = (&params.t, &params.d);
    let double = |x: &R::Elem| ring.add(x, x);
    let first = || CompanionPair {
        u: ring.one(),
        v: t.clone(),
        dpow: d.clone(),
    };

    if m == 0 {
        let state = CompanionPair {
            u: ring.zero(),
            v: double(&ring.one()),
            dpow: ring.one(),
        };
        visit(0, &state);
        return (state, want_next.then(first));
    }

    let mut k = 1u64;
    let mut lo = first();
    visit(k, &lo);
    if m == 1 && !want_next {
        return (lo, None);
    }
    let mut hi = CompanionPair {
        u: t.clone(),
        v: ring.sub(&ring.mul(t, t), &double(d)),
        dpow: ring.mul(d, d),
    };
    visit(k + 1, &hi);

    let even = |s: &CompanionPair<R::Elem>| CompanionPair {
        u: ring.mul(&s.u, &s.v),
        v: ring.sub(&ring.mul(&s.v, &s.v), &double(&s.dpow)),
        dpow: ring.mul(&s.dpow, &s.dpow),
    };
    let odd = |lo: &CompanionPair<R::Elem>, hi: &CompanionPair<R::Elem>| CompanionPair {
        u: ring.sub(&ring.mul(&hi.u, &lo.v), &lo.dpow),
        v: ring.sub(&ring.mul(&hi.v, &lo.v), &ring.mul(t, &lo.dpow)),
        dpow: ring.mul(&lo.dpow, &hi.dpow),
    };

    let bits = 64 - m.leading_zeros();
    for i in (0..bits - 1).rev() {
        let mid = odd(&lo, &hi);
        if (m >> i) & 1 == 0 {
            lo = even(&lo);
            hi = mid;
            k *= 2;
        } else {
            hi = even(&hi);
            lo = mid;
            k = 2 * k + 1;
        }
        visit(k, &lo);
        visit(k + 1, &hi);
    }
    debug_assert_eq!(k, m);
    (lo, Some(hi))
}

pub fn p_m<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
    engine: Engine,
) -> Result<R::Elem> {
    match engine {
        Engine::Iterative => Ok(p_m_iterative(ring, params, m)),
        Engine::Binomial => p_m_binomial(ring, params, m),
        Engine::Doubling => Ok(p_m_doubling(ring, params, m)),
    }
}

/// Reduced form of `x^m`: `(P_m, -d*P_{m-1})`, with `x^0 = 1` giving `(0, 1)`.
pub fn x_power<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
    engine: Engine,
) -> Result<LinearForm<R::Elem>> {
    if m == 0 {
        if engine == Engine::Binomial {
            return Err(Error::precondition("binomial engine", "m >= 1"));
        }
        return Ok(LinearForm {
            a: ring.zero(),
            b: ring.one(),
        });
    }
    let (a, prev) = match engine {
        Engine::Doubling => {
            let (below, at) = ladder(ring, params, m - 1, true, |_, _| {});
            (at.expect("requested").u, below.u)
        }
        Engine::Iterative => {
            let (prev, a) = iterate(ring, params, m);
            (a, prev)
        }
        Engine::Binomial if m == 1 => (p_m_binomial(ring, params, 1)?, ring.zero()),
        Engine::Binomial => (
            p_m_binomial(ring, params, m)?,
            p_m_binomial(ring, params, m - 1)?,
        ),
    };
    Ok(LinearForm {
        a,
        b: ring.neg(&ring.mul(&params.d, &prev)),
    })
}

/// `(a_m, b_m)` by stepping `a_{m+1} = t*a_m + b_m`, `b_{m+1} = -d*a_m` from
/// `(a_1, b_1) = (1, 0)`. Independent of the `P_m` engines; used as an oracle.
pub fn x_power_by_stepping<R: Ring>(
    ring: &R,
    params: &QuadParams<R::Elem>,
    m: u64,
) -> Result<LinearForm<R::Elem>> {
    if m == 0 {
        return Err(Error::precondition("coefficient stepping", "m >= 1"));
    }
    let neg_d = ring.neg(&params.d);
    let mut a = ring.one();
    let mut b = ring.zero();
    for _ in 1..m {
        let next_a = ring.add(&ring.mul(&params.t, &a), &b);
        b = ring.mul(&neg_d, &a);
        a = next_a;
    }
    Ok(LinearForm { a, b })
}

/// The universal polynomial `P_m(T, D)` in `Z[T, D]`, built by the recurrence.
pub fn p_m_symbolic(m: u64) -> BivariatePoly {
    p_m_iterative(&PolyRing, &QuadParams::universal(), m)
}

/// `sum_i C(m-1-i, i) T^(m-1-2i) (-D)^i`, assembled term by term with
/// independently computed binomials. `m = 0` gives the zero polynomial.
pub fn p_m_closed_form_poly(m: u64) -> BivariatePoly {
    if m == 0 {
        return BivariatePoly::zero();
    }
    let top = (m - 1) as u32;
    BivariatePoly::from_terms((0..=top / 2).map(|i| {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        (
            Monomial::new(top - 2 * i, i),
            binomial(u64::from(top - i), u64::from(i)) * sign,
        )
    }))
}

/// `C(n, k)` as a product of ratios.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    c
}
