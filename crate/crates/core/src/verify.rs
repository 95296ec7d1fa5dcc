//! Invariant sweeps behind `quadpow verify`.
//!
//! Every sweep compares a computation against an independent oracle and
//! records one [`Check`] per case. Randomness is seeded, so a run is
//! reproducible from its [`Options`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fibapp::{
    fib, fib_matrix_check, fib_nm_identity, fib_nm_terms, verify_chebyshev_numeric,
    verify_chebyshev_relation,
};
use crate::mat2::Mat2;
use crate::quadratic::{
    companion_states, p_m, p_m_binomial, p_m_closed_form_poly, p_m_doubling, p_m_iterative,
    p_m_symbolic, x_power, x_power_by_stepping, Engine, LinearForm, QuadParams,
};
use crate::report::{Check, Report};
use crate::ring::{
    BivariatePoly, Counted, IntegerRing, ModRing, Monomial, PolyRing, RationalRing, Ring,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024_0001;
const PRIME: u64 = 1_000_000_007;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Engines,
    Matrix,
    Fibonacci,
    Chebyshev,
    Symbolic,
    All,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "engines" => Scope::Engines,
            "matrix" => Scope::Matrix,
            "fibonacci" => Scope::Fibonacci,
            "chebyshev" => Scope::Chebyshev,
            "symbolic" => Scope::Symbolic,
            "all" => Scope::All,
            other => return Err(Error::parse(0, format!("unknown scope {other:?}"))),
        })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Engines => "engines",
            Scope::Matrix => "matrix",
            Scope::Fibonacci => "fibonacci",
            Scope::Chebyshev => "chebyshev",
            Scope::Symbolic => "symbolic",
            Scope::All => "all",
        })
    }
}

/// A deliberate defect in the code under test, used to prove that the sweeps
/// can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Uses `+d` where `-d` belongs: in the binomial sum and in the scalar
    /// part of `x^m`.
    SignFlip,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sign-flip" => Ok(Fault::SignFlip),
            other => Err(Error::parse(0, format!("unknown fault {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            fault: None,
        }
    }
}

pub fn run(scope: Scope, options: &Options) -> Report {
    let mut v = Verifier::new(options);
    match scope {
        Scope::Engines => v.engines(),
        Scope::Matrix => v.matrix(),
        Scope::Fibonacci => v.fibonacci(),
        Scope::Chebyshev => v.chebyshev(),
        Scope::Symbolic => v.symbolic(),
        Scope::All => {
            v.engines();
            v.matrix();
            v.fibonacci();
            v.chebyshev();
            v.symbolic();
        }
    }
    v.report
}

struct Verifier {
    rng: ChaCha8Rng,
    fault: Option<Fault>,
    report: Report,
}

impl Verifier {
    fn new(options: &Options) -> Self {
        Verifier {
            rng: ChaCha8Rng::seed_from_u64(options.seed),
            fault: options.fault,
            report: Report::new(),
        }
    }

    fn push(&mut self, check: Check) {
        self.report.push(check);
    }

    // Subject side: the computations under test, where a fault may be injected.

    fn p_m<R: Ring>(&self, ring: &R, params: &QuadParams<R::Elem>, m: u64, engine: Engine) -> R::Elem {
        match (engine, self.fault) {
            (Engine::Binomial, Some(Fault::SignFlip)) => {
                let flipped = QuadParams {
                    t: params.t.clone(),
                    d: ring.neg(&params.d),
                };
                p_m_binomial(ring, &flipped, m).expect("m >= 1")
            }
            _ => p_m(ring, params, m, engine).expect("engine accepts m"),
        }
    }

    fn x_power<R: Ring>(
        &self,
        ring: &R,
        params: &QuadParams<R::Elem>,
        m: u64,
        engine: Engine,
    ) -> LinearForm<R::Elem> {
        let form = x_power(ring, params, m, engine).expect("engine accepts m");
        match self.fault {
            Some(Fault::SignFlip) => LinearForm {
                b: ring.neg(&form.b),
                a: form.a,
            },
            None => form,
        }
    }

    fn pow_ch<R: Ring>(&self, ring: &R, mat: &Mat2<R::Elem>, m: u64, engine: Engine) -> Mat2<R::Elem> {
        let params = QuadParams {
            t: mat.trace(ring),
            d: mat.det(ring),
        };
        let form = self.x_power(ring, &params, m, engine);
        mat.scale(ring, &form.a).add(ring, &Mat2::identity(ring).scale(ring, &form.b))
    }

    fn engines_for(m: u64) -> impl Iterator<Item = Engine> {
        Engine::ALL
            .into_iter()
            .filter(move |e| m > 0 || *e != Engine::Binomial)
    }

    fn int(&mut self, lo: i64, hi: i64) -> BigInt {
        BigInt::from(self.rng.gen_range(lo..=hi))
    }

    // Sweeps.

    fn engines(&mut self) {
        self.ring_axioms();
        self.modular_expression_trees();

        let z = IntegerRing;
        for _ in 0..1000 {
            let params = QuadParams {
                t: self.int(-100, 100),
                d: self.int(-100, 100),
            };
            self.engine_agreement(&z, &params, 0..=64);
        }
        let prime = ModRing::new(PRIME).expect("valid modulus");
        for m in [1_000u64, 10_000, 100_000] {
            let params = QuadParams {
                t: prime.embed_i64(self.rng.gen_range(0..PRIME as i64)),
                d: prime.embed_i64(self.rng.gen_range(0..PRIME as i64)),
            };
            self.engine_agreement(&prime, &params, m..=m);
        }
        for _ in 0..3 {
            let m = self.rng.gen_range(1..=20_000u64);
            let params = QuadParams {
                t: self.int(-100, 100),
                d: self.int(-100, 100),
            };
            let expected = p_m_iterative(&z, &params, m);
            let actual = self.p_m(&z, &params, m, Engine::Doubling);
            self.push(Check::new(
                format!("bigint engines agree at (t,d)=({},{}) m={m}", params.t, params.d),
                digest(&expected),
                digest(&actual),
            ));
        }
        let q = RationalRing;
        for _ in 0..10 {
            let params = QuadParams {
                t: self.rational(),
                d: self.rational(),
            };
            self.engine_agreement(&q, &params, 0..=64);
        }
        let small = ModRing::new(12).expect("valid modulus");
        for t in 0..12 {
            for d in 0..12 {
                let params = QuadParams {
                    t: small.embed_i64(t),
                    d: small.embed_i64(d),
                };
                self.engine_agreement(&small, &params, 0..=64);
            }
        }
        let universal = QuadParams::universal();
        self.engine_agreement(&PolyRing, &universal, 0..=40);

        self.stepping_oracle();
        self.companion_identity();
        self.complexity();
    }

    fn engine_agreement<R: Ring>(
        &mut self,
        ring: &R,
        params: &QuadParams<R::Elem>,
        ms: std::ops::RangeInclusive<u64>,
    ) {
        let label = format!(
            "{} engines agree at (t,d)=({},{}) for m in {}..={}",
            ring.name(),
            ring.render(&params.t),
            ring.render(&params.d),
            ms.start(),
            ms.end()
        );
        let mut first_bad = None;
        for m in ms {
            let oracle = p_m_iterative(ring, params, m);
            for engine in Self::engines_for(m) {
                let got = self.p_m(ring, params, m, engine);
                if got != oracle && first_bad.is_none() {
                    first_bad = Some((m, engine, oracle.clone(), got));
                }
            }
        }
        self.push(match first_bad {
            None => Check::new(label, "agree", "agree"),
            Some((m, engine, want, got)) => Check::new(
                label,
                format!("m={m}: {}", ring.render(&want)),
                format!("m={m} {engine}: {}", ring.render(&got)),
            ),
        });
    }

    fn rational(&mut self) -> BigRational {
        BigRational::new(self.int(-50, 50), BigInt::from(self.rng.gen_range(1..=6)))
    }

    fn poly(&mut self) -> BivariatePoly {
        let n = self.rng.gen_range(0..4);
        BivariatePoly::from_terms((0..n).map(|_| {
            let m = Monomial::new(self.rng.gen_range(0..3), self.rng.gen_range(0..3));
            (m, self.int(-5, 5))
        }))
    }

    fn ring_axioms(&mut self) {
        let ints: Vec<BigInt> = (0..60).map(|_| self.int(-1_000_000, 1_000_000)).collect();
        self.axioms_over(&IntegerRing, &ints);
        let modular = ModRing::new(PRIME).expect("valid modulus");
        let residues: Vec<_> = ints.iter().map(|n| modular.embed(n)).collect();
        self.axioms_over(&modular, &residues);
        let rationals: Vec<_> = (0..60).map(|_| self.rational()).collect();
        self.axioms_over(&RationalRing, &rationals);
        let polys: Vec<_> = (0..30).map(|_| self.poly()).collect();
        self.axioms_over(&PolyRing, &polys);

        // evaluation is a ring homomorphism
        let mut bad = 0;
        for pair in polys.chunks(2) {
            let (p, q) = (&pair[0], &pair[1]);
            let (t, d) = (self.int(-20, 20), self.int(-20, 20));
            let z = IntegerRing;
            let lhs = p.mul(q).eval(&z, &t, &d);
            let rhs = p.eval(&z, &t, &d) * q.eval(&z, &t, &d);
            let (tm, dm) = (modular.embed(&t), modular.embed(&d));
            let lhs_m = p.mul(q).eval(&modular, &tm, &dm);
            let rhs_m = modular.mul(&p.eval(&modular, &tm, &dm), &q.eval(&modular, &tm, &dm));
            if lhs != rhs || lhs_m != rhs_m {
                bad += 1;
            }
        }
        self.push(Check::new(
            "polynomial evaluation is multiplicative (bigint, mod)",
            0,
            bad,
        ));
    }

    fn axioms_over<R: Ring>(&mut self, ring: &R, samples: &[R::Elem]) {
        let mut violations = Vec::new();
        let n = samples.len();
        for i in 0..n {
            let (a, b, c) = (&samples[i], &samples[(i * 7 + 1) % n], &samples[(i * 13 + 5) % n]);
            let laws = [
                ("assoc+", ring.add(&ring.add(a, b), c) == ring.add(a, &ring.add(b, c))),
                ("assoc*", ring.mul(&ring.mul(a, b), c) == ring.mul(a, &ring.mul(b, c))),
                ("comm+", ring.add(a, b) == ring.add(b, a)),
                ("comm*", ring.mul(a, b) == ring.mul(b, a)),
                (
                    "distrib",
                    ring.mul(a, &ring.add(b, c)) == ring.add(&ring.mul(a, b), &ring.mul(a, c)),
                ),
                ("one", ring.mul(a, &ring.one()) == *a),
                ("zero", ring.add(a, &ring.zero()) == *a),
                ("inverse", ring.is_zero(&ring.add(a, &ring.neg(a)))),
                ("canonical", ring.parse(&ring.render(a)).ok().as_ref() == Some(a)),
            ];
            violations.extend(laws.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name));
        }
        self.push(Check::new(
            format!("{} ring axioms on {n} random triples", ring.name()),
            "[]",
            format!("{violations:?}"),
        ));
    }

    fn modular_expression_trees(&mut self) {
        let modulus = self.rng.gen_range(2..1_000_000u64);
        let ring = ModRing::new(modulus).expect("valid modulus");
        let mut bad = 0;
        for _ in 0..200 {
            let (exact, reduced) = self.expression(&ring, 8);
            if ring.embed(&exact) != reduced {
                bad += 1;
            }
        }
        self.push(Check::new(
            format!("mod({modulus}) agrees with bigint on 200 expression trees of depth <= 8"),
            0,
            bad,
        ));
    }

    fn expression(&mut self, ring: &ModRing, depth: u32) -> (BigInt, crate::ring::ModValue) {
        if depth == 0 || self.rng.gen_bool(0.2) {
            let n = self.int(-1_000_000_000, 1_000_000_000);
            let r = ring.embed(&n);
            return (n, r);
        }
        let (a, ar) = self.expression(ring, depth - 1);
        match self.rng.gen_range(0..4) {
            0 => (-a, ring.neg(&ar)),
            op => {
                let (b, br) = self.expression(ring, depth - 1);
                match op {
                    1 => (a + b, ring.add(&ar, &br)),
                    2 => (a - b, ring.sub(&ar, &br)),
                    _ => (a * b, ring.mul(&ar, &br)),
                }
            }
        }
    }

    fn stepping_oracle(&mut self) {
        let modular = ModRing::new(PRIME).expect("valid modulus");
        for round in 0..8 {
            if round < 2 {
                let params = QuadParams {
                    t: self.int(-100, 100),
                    d: self.int(-100, 100),
                };
                self.stepping_over(&IntegerRing, &params, 512);
            } else {
                let params = QuadParams {
                    t: modular.embed_i64(self.rng.gen_range(0..PRIME as i64)),
                    d: modular.embed_i64(self.rng.gen_range(0..PRIME as i64)),
                };
                self.stepping_over(&modular, &params, 512);
            }
        }
    }

    fn stepping_over<R: Ring>(&mut self, ring: &R, params: &QuadParams<R::Elem>, max_m: u64) {
        let neg_d = ring.neg(&params.d);
        let (mut a, mut b) = (ring.one(), ring.zero());
        let mut first_bad = None;
        for m in 1..=max_m {
            if m > 1 {
                let next_a = ring.add(&ring.mul(&params.t, &a), &b);
                b = ring.mul(&neg_d, &a);
                a = next_a;
            }
            for engine in [Engine::Iterative, Engine::Doubling, Engine::Binomial] {
                if engine == Engine::Binomial && m % 64 != 0 {
                    continue;
                }
                let form = self.x_power(ring, params, m, engine);
                if (form.a != a || form.b != b) && first_bad.is_none() {
                    first_bad = Some(format!("m={m} {engine}"));
                }
            }
        }
        debug_assert_eq!(
            x_power_by_stepping(ring, params, max_m).expect("m >= 1"),
            LinearForm { a, b }
        );
        self.push(Check::new(
            format!(
                "{} x^m matches coefficient stepping at (t,d)=({},{}) for m in 1..={max_m}",
                ring.name(),
                ring.render(&params.t),
                ring.render(&params.d)
            ),
            "none",
            first_bad.unwrap_or_else(|| "none".into()),
        ));
    }

    fn companion_identity(&mut self) {
        let z = IntegerRing;
        for _ in 0..20 {
            let params = QuadParams {
                t: self.int(-100, 100),
                d: self.int(-100, 100),
            };
            let m = self.rng.gen_range(0..=1000u64);
            let disc = &params.t * &params.t - 4 * &params.d;
            let bad: Vec<u64> = companion_states(&z, &params, m)
                .into_iter()
                .filter(|(_, s)| &s.v * &s.v - &disc * &s.u * &s.u != 4 * &s.dpow)
                .map(|(k, _)| k)
                .collect();
            self.push(Check::new(
                format!(
                    "v^2 - (t^2-4d) u^2 = 4 d^k along the ladder to m={m} at (t,d)=({},{})",
                    params.t, params.d
                ),
                "[]",
                format!("{bad:?}"),
            ));
        }
    }

    fn complexity(&mut self) {
        let ring = Counted::new(IntegerRing);
        let params = QuadParams {
            t: BigInt::from(3),
            d: BigInt::from(-5),
        };
        for exp in [8u32, 12, 16] {
            let m = 1u64 << exp;
            let bound = 10.0 * ((m + 2) as f64).log2();
            ring.reset();
            p_m_doubling(&ring, &params, m);
            let doubling = ring.counts().multiplications;
            self.push(Check::judged(
                format!("doubling multiplications at m=2^{exp} <= 10 log2(m+2)"),
                format!("<= {bound:.1}"),
                doubling,
                (doubling as f64) <= bound,
            ));
            ring.reset();
            p_m_iterative(&ring, &params, m);
            let iterative = ring.counts().multiplications;
            self.push(Check::judged(
                format!("iterative multiplications at m=2^{exp} >= m-1"),
                format!(">= {}", m - 1),
                iterative,
                iterative >= m - 1,
            ));
        }
    }

    fn random_matrix(&mut self) -> Mat2<BigInt> {
        Mat2::from_fn(|_, _| BigInt::from(self.rng.gen_range(-9..=9)))
    }

    fn matrix(&mut self) {
        let z = IntegerRing;
        for _ in 0..100 {
            let mat = self.random_matrix();
            let mut power = Mat2::identity(&z);
            let mut first_bad = None;
            for m in 0..=200u64 {
                if m > 0 {
                    power = power.mul(&z, &mat);
                }
                for engine in Self::engines_for(m) {
                    if self.pow_ch(&z, &mat, m, engine) != power && first_bad.is_none() {
                        first_bad = Some(format!("m={m} {engine}"));
                    }
                }
                if m % 50 == 0 && mat.pow_naive(&z, m) != power && first_bad.is_none() {
                    first_bad = Some(format!("m={m} square-and-multiply"));
                }
            }
            self.push(Check::new(
                format!("M^m via trace/det = repeated product for M={} m<=200", mat.render(&z)),
                "none",
                first_bad.unwrap_or_else(|| "none".into()),
            ));
        }

        for p in [2u64, 7, PRIME] {
            let ring = ModRing::new(p).expect("valid modulus");
            for _ in 0..10 {
                let int_mat = self.random_matrix();
                let mat = int_mat.map(|e| ring.embed(e));
                let m = self.rng.gen_range(0..=100_000u64);
                let naive = mat.pow_naive(&ring, m);
                let mut bad = Vec::new();
                for engine in Self::engines_for(m) {
                    if engine == Engine::Binomial && m > 20_000 {
                        continue;
                    }
                    if self.pow_ch(&ring, &mat, m, engine) != naive {
                        bad.push(engine.as_str());
                    }
                }
                self.push(Check::new(
                    format!(
                        "mod({p}) M^{m} via trace/det = square-and-multiply for M={}",
                        int_mat.render(&z)
                    ),
                    "[]",
                    format!("{bad:?}"),
                ));
            }
        }

        let mut bad = 0;
        for _ in 0..200 {
            let mat = self.random_matrix();
            let (t, d) = (mat.trace(&z), mat.det(&z));
            let lhs = mat
                .mul(&z, &mat)
                .add(&z, &mat.scale(&z, &-t))
                .add(&z, &Mat2::identity(&z).scale(&z, &d));
            if lhs != Mat2::from_fn(|_, _| BigInt::zero()) {
                bad += 1;
            }
        }
        self.push(Check::new("M^2 - tr(M) M + det(M) I = 0 for 200 random M", 0, bad));

        self.similarity();
    }

    fn similarity(&mut self) {
        let q = RationalRing;
        let z = IntegerRing;
        for _ in 0..20 {
            let mat = self.random_matrix();
            let s = loop {
                let s = self.random_matrix();
                if !s.det(&z).is_zero() {
                    break s;
                }
            };
            let det_s = BigRational::from_integer(s.det(&z));
            let s_inv = Mat2 {
                e11: BigRational::from_integer(s.e22.clone()) / &det_s,
                e12: BigRational::from_integer(-&s.e12) / &det_s,
                e21: BigRational::from_integer(-&s.e21) / &det_s,
                e22: BigRational::from_integer(s.e11.clone()) / &det_s,
            };
            let to_q = |m: &Mat2<BigInt>| m.map(|e| BigRational::from_integer(e.clone()));
            debug_assert_eq!(to_q(&s).mul(&q, &s_inv), Mat2::identity(&q));
            let conj = to_q(&s).mul(&q, &to_q(&mat)).mul(&q, &s_inv);
            let m = self.rng.gen_range(1..=50u64);
            let params_of = |m: &Mat2<BigRational>| QuadParams {
                t: m.trace(&q),
                d: m.det(&q),
            };
            let original = self.x_power(&q, &params_of(&to_q(&mat)), m, Engine::Doubling);
            let conjugated = self.x_power(&q, &params_of(&conj), m, Engine::Doubling);
            let pow_conj = self.pow_ch(&q, &conj, m, Engine::Doubling);
            let naive_conj = conj.pow_naive(&q, m);
            self.push(Check::new(
                format!(
                    "S M S^-1 keeps (tr, det) and the x^{m} coefficients for M={} S={}",
                    mat.render(&z),
                    s.render(&z)
                ),
                format!("{} {} true", q.render(&original.a), q.render(&original.b)),
                format!(
                    "{} {} {}",
                    q.render(&conjugated.a),
                    q.render(&conjugated.b),
                    pow_conj == naive_conj
                ),
            ));
        }
    }

    fn fibonacci(&mut self) {
        for n in 1..=50u64 {
            let mut bad = Vec::new();
            for m in 1..=50u64 {
                if self.fib_nm(n, m) != fib(n * m) {
                    bad.push(m);
                }
            }
            self.push(Check::new(
                format!("F_(nm) expansion = F_(nm) for n={n}, m in 1..=50"),
                "[]",
                format!("{bad:?}"),
            ));
        }
        for _ in 0..100 {
            let n = self.rng.gen_range(1..=10_000u64);
            let m = self.rng.gen_range(1..=10_000 / n);
            let (got, want) = (self.fib_nm(n, m), fib(n * m));
            self.push(Check::new(
                format!("F_(nm) expansion at (n,m)=({n},{m})"),
                digest(&want),
                digest(&got),
            ));
        }
        let mut bad = Vec::new();
        for n in 1..=200u64 {
            let report = fib_matrix_check(n).expect("n >= 1");
            if !report.passed() {
                bad.push(n);
            }
        }
        self.push(Check::new(
            "A^n entries, tr(A^n) = L_n, det(A^n) = (-1)^n for n in 1..=200",
            "[]",
            format!("{bad:?}"),
        ));
        let mut bad = Vec::new();
        for n in (1..=49u64).step_by(2) {
            let terms = fib_nm_terms(n, 30).expect("n, m >= 1");
            if terms.iter().any(|t| t <= &BigInt::zero()) {
                bad.push(n);
            }
        }
        self.push(Check::new(
            "odd n: every summand of the F_(nm) expansion is positive (m=30)",
            "[]",
            format!("{bad:?}"),
        ));
        let mut bad = Vec::new();
        for m in 1..=100u64 {
            if self.fib_nm(1, m) != fib(m) {
                bad.push(m);
            }
        }
        self.push(Check::new(
            "n=1 specialization gives F_m for m in 1..=100",
            "[]",
            format!("{bad:?}"),
        ));
    }

    fn fib_nm(&self, n: u64, m: u64) -> BigInt {
        let value = fib_nm_identity(n, m).expect("n, m >= 1");
        match self.fault {
            // a flipped sign shows up as the sum over (-1)^(i n) instead
            Some(Fault::SignFlip) => {
                let terms = fib_nm_terms(n, m).expect("n, m >= 1");
                let flipped: BigInt = terms
                    .iter()
                    .enumerate()
                    .map(|(i, t)| if i % 2 == 1 { -t } else { t.clone() })
                    .sum();
                fib(n) * flipped
            }
            None => value,
        }
    }

    fn chebyshev(&mut self) {
        for s in 1..=3i64 {
            for t in -5..=5i64 {
                let mut bad = Vec::new();
                for m in 1..=32u64 {
                    let t_big = BigInt::from(t);
                    let s_big = BigInt::from(s);
                    let report =
                        verify_chebyshev_relation(&t_big, &s_big, m).expect("s, m >= 1");
                    // the binomial engine must land on the same rendered value
                    let params = QuadParams {
                        t: t_big,
                        d: &s_big * &s_big,
                    };
                    let via_sum = self.p_m(&IntegerRing, &params, m, Engine::Binomial);
                    let passed = report.passed() && report.checks[0].actual == via_sum.to_string();
                    if !passed {
                        bad.push(m);
                    }
                }
                self.push(Check::new(
                    format!("P_m(t,s^2) = s^(m-1) U_(m-1)(t/2s) exactly at t={t} s={s}, m in 1..=32"),
                    "[]",
                    format!("{bad:?}"),
                ));
            }
        }
        for (t, d, m) in numeric_grid() {
            let report = verify_chebyshev_numeric(t, d, m).expect("d > 0, m >= 1");
            self.report.extend(report);
        }
    }

    fn symbolic(&mut self) {
        for m in 1..=64u64 {
            let built = match self.fault {
                Some(Fault::SignFlip) => self.p_m(&PolyRing, &QuadParams::universal(), m, Engine::Binomial),
                None => p_m_symbolic(m),
            };
            self.push(Check::new(
                format!("P_{m}(T,D) by recurrence = binomial sum"),
                p_m_closed_form_poly(m),
                built,
            ));
        }
        let rings_checked = [
            self.universality(&IntegerRing, |v| v.int(-50, 50)),
            self.universality(&ModRing::new(PRIME).expect("valid"), |v| {
                ModRing::new(PRIME).expect("valid").embed_i64(v.rng.gen_range(0..PRIME as i64))
            }),
            self.universality(&ModRing::new(6).expect("valid"), |v| {
                ModRing::new(6).expect("valid").embed_i64(v.rng.gen_range(0..6))
            }),
            self.universality(&RationalRing, |v| v.rational()),
        ];
        for (name, bad) in rings_checked {
            self.push(Check::new(
                format!("P_m(T,D) evaluated over {name} = recurrence for m in 0..=64"),
                "[]",
                format!("{bad:?}"),
            ));
        }
    }

    fn universality<R: Ring>(
        &mut self,
        ring: &R,
        mut sample: impl FnMut(&mut Self) -> R::Elem,
    ) -> (String, Vec<u64>) {
        let mut bad = Vec::new();
        for m in 0..=64u64 {
            let params = QuadParams {
                t: sample(self),
                d: sample(self),
            };
            let poly = p_m_symbolic(m);
            if poly.eval(ring, &params.t, &params.d) != p_m_iterative(ring, &params, m) {
                bad.push(m);
            }
        }
        (ring.name(), bad)
    }
}

/// The `(t, d, m)` grid of the floating-point Chebyshev check: 10 values of
/// each, with `|t| <= 10`, `0 < d <= 10`, `1 <= m <= 40`.
pub fn numeric_grid() -> Vec<(f64, f64, u64)> {
    let ts: Vec<f64> = (0..10).map(|i| -10.0 + 20.0 * i as f64 / 9.0).collect();
    let ds: Vec<f64> = (0..10).map(|i| 0.5 + 9.5 * i as f64 / 9.0).collect();
    let ms: Vec<u64> = (0..10).map(|i| 1 + 39 * i / 9).collect();
    let mut grid = Vec::with_capacity(1000);
    for &t in &ts {
        for &d in &ds {
            for &m in &ms {
                grid.push((t, d, m));
            }
        }
    }
    grid
}

/// Short fingerprint of a possibly huge integer: digit count and the last 12 digits.
fn digest(n: &BigInt) -> String {
    let s = n.to_string();
    if s.len() <= 40 {
        s
    } else {
        format!("{} digits ...{}", s.len(), &s[s.len() - 12..])
    }
}
