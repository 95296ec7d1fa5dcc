//! Operation-count benchmarks for the `P_m` engines.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::quadratic::{p_m, Engine, QuadParams};
use crate::ring::{Counted, IntegerRing, ModRing, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchRing {
    BigInt,
    Mod(u64),
}

impl fmt::Display for BenchRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchRing::BigInt => f.write_str("bigint"),
            BenchRing::Mod(n) => write!(f, "mod({n})"),
        }
    }
}

/// One `(m, engine)` measurement. Counts are exact; `wall_time_ns` is the best of
/// [`TIMING_RUNS`] runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub subcommand: &'static str,
    pub engine: Engine,
    pub m: u64,
    pub ring: String,
    pub multiplications: u64,
    pub additions: u64,
    pub wall_time_ns: u64,
}

pub const TIMING_RUNS: usize = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenchOutput {
    pub records: Vec<BenchRecord>,
    /// Skipped combinations, e.g. the binomial engine at `m = 0`.
    pub notices: Vec<String>,
}

/// Times `P_m(t, d)` for every `(m, engine)` pair.
pub fn bench_suite(
    ms: &[u64],
    engines: &[Engine],
    ring: BenchRing,
    t: &BigInt,
    d: &BigInt,
) -> Result<BenchOutput> {
    match ring {
        BenchRing::BigInt => run_all(IntegerRing, ms, engines, t, d),
        BenchRing::Mod(n) => run_all(ModRing::new(n)?, ms, engines, t, d),
    }
}

fn run_all<R: Ring>(
    ring: R,
    ms: &[u64],
    engines: &[Engine],
    t: &BigInt,
    d: &BigInt,
) -> Result<BenchOutput> {
    let ring = Counted::new(ring);
    let params = QuadParams {
        t: ring.embed(t),
        d: ring.embed(d),
    };
    let mut out = BenchOutput::default();
    for &m in ms {
        for &engine in engines {
            if engine == Engine::Binomial && m == 0 {
                out.notices
                    .push("skipping binomial engine at m=0 (the sum starts at m=1)".to_string());
                continue;
            }
            let mut best = u64::MAX;
            let mut counts = None;
            for _ in 0..TIMING_RUNS {
                ring.reset();
                let start = Instant::now();
                let value = p_m(&ring, &params, m, engine)?;
                let elapsed = start.elapsed().as_nanos().max(1) as u64;
                drop(value);
                best = best.min(elapsed);
                let observed = ring.counts();
                debug_assert!(counts.is_none_or(|c| c == observed));
                counts = Some(observed);
            }
            let counts = counts.expect("at least one run");
            out.records.push(BenchRecord {
                subcommand: "pm",
                engine,
                m,
                ring: ring.name(),
                multiplications: counts.multiplications,
                additions: counts.additions,
                wall_time_ns: best,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_bench(ms: &[u64], engines: &[Engine], ring: BenchRing) -> BenchOutput {
        bench_suite(ms, engines, ring, &BigInt::from(1), &BigInt::from(-1)).unwrap()
    }

    #[test]
    fn counts_at_two_to_the_sixteen() {
        let m = 1 << 16;
        let out = fib_bench(&[m], &[Engine::Iterative, Engine::Doubling], BenchRing::BigInt);
        let [iterative, doubling] = &out.records[..] else {
            panic!("expected two records");
        };
        assert!(iterative.multiplications >= m - 1);
        assert!(doubling.multiplications <= 10 * 16);
        assert!(doubling.wall_time_ns > 0);
    }

    #[test]
    fn index_one_is_free() {
        let out = fib_bench(&[1], &[Engine::Iterative, Engine::Doubling], BenchRing::BigInt);
        for r in &out.records {
            assert_eq!(r.multiplications, 0, "{:?}", r.engine);
        }
    }

    #[test]
    fn binomial_at_zero_is_skipped() {
        let out = fib_bench(&[0, 5], &Engine::ALL, BenchRing::Mod(97));
        assert_eq!(out.records.len(), 5);
        assert_eq!(out.notices.len(), 1);
        assert!(out.records.iter().all(|r| r.ring == "mod(97)"));
    }

    #[test]
    fn counts_are_deterministic() {
        let a = fib_bench(&[1000, 4097], &Engine::ALL, BenchRing::Mod(1_000_000_007));
        let b = fib_bench(&[1000, 4097], &Engine::ALL, BenchRing::Mod(1_000_000_007));
        let strip = |o: &BenchOutput| {
            o.records
                .iter()
                .map(|r| (r.engine, r.m, r.multiplications, r.additions))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
