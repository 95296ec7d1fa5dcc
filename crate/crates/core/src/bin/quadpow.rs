//! `quadpow`: exact powers in quadratic algebras from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use quadpow::bench::{bench_suite, BenchRing};
use quadpow::fibapp::{fib, fib_mod, fib_nm_identity, fib_with, lucas, lucas_mod};
use quadpow::quadratic::{p_m, p_m_symbolic, x_power};
use quadpow::ring::{parse_signed_decimal, IntegerRing, ModRing, Ring};
use quadpow::verify::{self, Fault, Options, Scope};
use quadpow::{Engine, Error, Mat2, QuadParams, Report};

#[derive(Debug, Parser)]
#[command(name = "quadpow", version, about, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// P_m(t, d), the coefficient of x in x^m
    Pm {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: RingArgs,
    },
    /// x^m reduced to a*x + b, printed as "a,b"
    Xpow {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: RingArgs,
    },
    /// M^m for a 2x2 matrix given as "a,b;c,d"
    Matpow {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        m: u64,
        #[command(flatten)]
        common: RingArgs,
    },
    /// Fibonacci number F_n
    Fib {
        #[arg(long, allow_hyphen_values = true)]
        n: u64,
        #[command(flatten)]
        common: RingArgs,
    },
    /// Lucas number L_n
    Lucas {
        #[arg(long, allow_hyphen_values = true)]
        n: u64,
        #[arg(long = "mod", value_name = "N")]
        modulus: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// F_(nm) from F_n and L_n, checked against F_(nm) computed directly
    Fibnm {
        #[arg(long, allow_hyphen_values = true)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// The universal polynomial P_m(T, D)
    Symbolic {
        #[arg(long, allow_hyphen_values = true)]
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant sweeps
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Deliberately break the code under test (only `sign-flip`)
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
        #[arg(long)]
        json: bool,
    },
    /// Count ring operations and time the engines
    Bench {
        /// Comma-separated indices
        #[arg(long, value_delimiter = ',', required = true)]
        ms: Vec<u64>,
        /// Comma-separated engines
        #[arg(long, value_delimiter = ',', default_value = "iterative,doubling")]
        engines: Vec<Engine>,
        #[arg(long = "mod", value_name = "N")]
        modulus: Option<u64>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        d: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[arg(long, allow_hyphen_values = true)]
    d: String,
    #[arg(long, allow_hyphen_values = true)]
    m: u64,
}

#[derive(Debug, Args)]
struct RingArgs {
    #[arg(long, default_value = "doubling")]
    engine: Engine,
    #[arg(long = "mod", value_name = "N")]
    modulus: Option<u64>,
    #[arg(long)]
    json: bool,
}

/// What a successful dispatch prints, and whether every check in it held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn plain(text: String) -> Self {
        Outcome { text, ok: true }
    }

    fn json<T: Serialize>(value: &T) -> Self {
        Outcome::plain(serde_json::to_string(value).expect("serializable"))
    }

    fn either<T: Serialize>(json: bool, plain: String, value: &T) -> Self {
        if json {
            Outcome::json(value)
        } else {
            Outcome::plain(plain)
        }
    }
}

#[derive(Debug)]
struct UsageError(String);

impl UsageError {
    fn from_error(context: &str, err: Error) -> Self {
        UsageError(format!("{context}: {err}"))
    }
}

type CliResult = Result<Outcome, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Pm { params, common } => match common.modulus {
            None => pm(&IntegerRing, &params, &common),
            Some(n) => pm(&mod_ring(n)?, &params, &common),
        },
        Command::Xpow { params, common } => match common.modulus {
            None => xpow(&IntegerRing, &params, &common),
            Some(n) => xpow(&mod_ring(n)?, &params, &common),
        },
        Command::Matpow { matrix, m, common } => match common.modulus {
            None => matpow(&IntegerRing, &matrix, m, &common),
            Some(n) => matpow(&mod_ring(n)?, &matrix, m, &common),
        },
        Command::Fib { n, common } => fib_cmd(n, &common),
        Command::Lucas { n, modulus, json } => lucas_cmd(n, modulus, json),
        Command::Fibnm { n, m, json } => fibnm(n, m, json),
        Command::Symbolic { m, json } => symbolic(m, json),
        Command::Verify {
            scope,
            seed,
            inject_fault,
            json,
        } => Ok(verify_cmd(
            scope,
            &Options {
                seed,
                fault: inject_fault,
            },
            json,
        )),
        Command::Bench {
            ms,
            engines,
            modulus,
            t,
            d,
            json,
        } => bench(&ms, &engines, modulus, &t, &d, json),
    }
}

fn mod_ring(n: u64) -> Result<ModRing, UsageError> {
    ModRing::new(n).map_err(|e| UsageError::from_error("--mod", e))
}

fn scalar<R: Ring>(ring: &R, flag: &str, text: &str) -> Result<R::Elem, UsageError> {
    ring.parse(text).map_err(|e| UsageError::from_error(flag, e))
}

fn params<R: Ring>(ring: &R, args: &ParamArgs) -> Result<QuadParams<R::Elem>, UsageError> {
    Ok(QuadParams {
        t: scalar(ring, "--t", &args.t)?,
        d: scalar(ring, "--d", &args.d)?,
    })
}

fn precondition(err: Error) -> UsageError {
    UsageError(err.to_string())
}

#[derive(Serialize)]
struct ScalarOut {
    subcommand: &'static str,
    ring: String,
    engine: Engine,
    m: String,
    value: String,
}

fn pm<R: Ring>(ring: &R, args: &ParamArgs, common: &RingArgs) -> CliResult {
    let params = params(ring, args)?;
    let value = p_m(ring, &params, args.m, common.engine).map_err(precondition)?;
    let rendered = ring.render(&value);
    Ok(Outcome::either(
        common.json,
        rendered.clone(),
        &ScalarOut {
            subcommand: "pm",
            ring: ring.name(),
            engine: common.engine,
            m: args.m.to_string(),
            value: rendered,
        },
    ))
}

#[derive(Serialize)]
struct LinearOut {
    ring: String,
    engine: Engine,
    m: String,
    a: String,
    b: String,
}

fn xpow<R: Ring>(ring: &R, args: &ParamArgs, common: &RingArgs) -> CliResult {
    let params = params(ring, args)?;
    let form = x_power(ring, &params, args.m, common.engine).map_err(precondition)?;
    let (a, b) = (ring.render(&form.a), ring.render(&form.b));
    Ok(Outcome::either(
        common.json,
        format!("{a},{b}"),
        &LinearOut {
            ring: ring.name(),
            engine: common.engine,
            m: args.m.to_string(),
            a,
            b,
        },
    ))
}

#[derive(Serialize)]
struct MatrixOut {
    ring: String,
    engine: Engine,
    m: String,
    matrix: String,
    entries: [[String; 2]; 2],
}

fn matpow<R: Ring>(ring: &R, text: &str, m: u64, common: &RingArgs) -> CliResult {
    let mat = Mat2::parse(ring, text).map_err(|e| UsageError::from_error("--matrix", e))?;
    let power = mat.pow_ch(ring, m, common.engine).map_err(precondition)?;
    let rendered = power.render(ring);
    let r = |e| ring.render(e);
    Ok(Outcome::either(
        common.json,
        rendered.clone(),
        &MatrixOut {
            ring: ring.name(),
            engine: common.engine,
            m: m.to_string(),
            entries: [
                [r(&power.e11), r(&power.e12)],
                [r(&power.e21), r(&power.e22)],
            ],
            matrix: rendered,
        },
    ))
}

fn fib_cmd(n: u64, common: &RingArgs) -> CliResult {
    let (ring, rendered) = match common.modulus {
        None => (
            IntegerRing.name(),
            fib_with(n, common.engine).map_err(precondition)?.to_string(),
        ),
        Some(modulus) => {
            let ring = mod_ring(modulus)?;
            let value = fib_mod(n, modulus, common.engine).map_err(precondition)?;
            (ring.name(), ring.render(&value))
        }
    };
    Ok(Outcome::either(
        common.json,
        rendered.clone(),
        &ScalarOut {
            subcommand: "fib",
            ring,
            engine: common.engine,
            m: n.to_string(),
            value: rendered,
        },
    ))
}

fn lucas_cmd(n: u64, modulus: Option<u64>, json: bool) -> CliResult {
    let (ring, rendered) = match modulus {
        None => (IntegerRing.name(), lucas(n).to_string()),
        Some(m) => {
            let ring = mod_ring(m)?;
            let value = lucas_mod(n, m).map_err(precondition)?;
            (ring.name(), ring.render(&value))
        }
    };
    Ok(Outcome::either(
        json,
        rendered.clone(),
        &ScalarOut {
            subcommand: "lucas",
            ring,
            engine: Engine::Doubling,
            m: n.to_string(),
            value: rendered,
        },
    ))
}

#[derive(Serialize)]
struct FibNmOut {
    fnm: String,
    check: String,
    pass: bool,
}

fn fibnm(n: u64, m: u64, json: bool) -> CliResult {
    let fnm = fib_nm_identity(n, m).map_err(precondition)?;
    let product = n
        .checked_mul(m)
        .ok_or_else(|| UsageError("n*m overflows a 64-bit index".into()))?;
    let check = fib(product);
    let pass = fnm == check;
    let out = FibNmOut {
        fnm: fnm.to_string(),
        check: check.to_string(),
        pass,
    };
    let plain = if pass {
        out.fnm.clone()
    } else {
        format!("{} (direct F_{product} = {})", out.fnm, out.check)
    };
    let mut outcome = Outcome::either(json, plain, &out);
    outcome.ok = pass;
    Ok(outcome)
}

#[derive(Serialize)]
struct TermOut {
    coeff: String,
    t: String,
    d: String,
}

#[derive(Serialize)]
struct SymbolicOut {
    m: String,
    poly: String,
    terms: Vec<TermOut>,
}

fn symbolic(m: u64, json: bool) -> CliResult {
    let poly = p_m_symbolic(m);
    let rendered = poly.to_string();
    let terms = poly
        .terms()
        .rev()
        .map(|(mono, c)| TermOut {
            coeff: c.to_string(),
            t: mono.t.to_string(),
            d: mono.d.to_string(),
        })
        .collect();
    Ok(Outcome::either(
        json,
        rendered.clone(),
        &SymbolicOut {
            m: m.to_string(),
            poly: rendered,
            terms,
        },
    ))
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    scope: String,
    seed: String,
    passed: bool,
    total: String,
    failed: String,
    checks: &'a Report,
}

fn verify_cmd(scope: Scope, options: &Options, json: bool) -> Outcome {
    let report = verify::run(scope, options);
    let failed = report.failures().count();
    let passed = failed == 0;
    let text = if json {
        serde_json::to_string(&VerifyOut {
            scope: scope.to_string(),
            seed: options.seed.to_string(),
            passed,
            total: report.len().to_string(),
            failed: failed.to_string(),
            checks: &report,
        })
        .expect("serializable")
    } else {
        let mut lines: Vec<String> = report
            .checks
            .iter()
            .map(|c| {
                if c.pass {
                    format!("PASS  {}", c.assertion)
                } else {
                    format!(
                        "FAIL  {}: expected {}, got {}",
                        c.assertion, c.expected, c.actual
                    )
                }
            })
            .collect();
        lines.push(format!(
            "{scope}: {}/{} checks passed",
            report.len() - failed,
            report.len()
        ));
        lines.join("\n")
    };
    Outcome { text, ok: passed }
}

#[derive(Serialize)]
struct BenchOut {
    subcommand: String,
    engine: Engine,
    m: String,
    ring: String,
    multiplications: String,
    additions: String,
    wall_time_ns: String,
}

fn bench(
    ms: &[u64],
    engines: &[Engine],
    modulus: Option<u64>,
    t: &str,
    d: &str,
    json: bool,
) -> CliResult {
    let parse = |flag: &str, s: &str| -> Result<BigInt, UsageError> {
        parse_signed_decimal(s).map_err(|e| UsageError::from_error(flag, e))
    };
    let (t, d) = (parse("--t", t)?, parse("--d", d)?);
    let ring = match modulus {
        None => BenchRing::BigInt,
        Some(n) => {
            mod_ring(n)?;
            BenchRing::Mod(n)
        }
    };
    let output = bench_suite(ms, engines, ring, &t, &d).map_err(precondition)?;
    for notice in &output.notices {
        eprintln!("note: {notice}");
    }
    let rows: Vec<BenchOut> = output
        .records
        .iter()
        .map(|r| BenchOut {
            subcommand: r.subcommand.to_string(),
            engine: r.engine,
            m: r.m.to_string(),
            ring: r.ring.clone(),
            multiplications: r.multiplications.to_string(),
            additions: r.additions.to_string(),
            wall_time_ns: r.wall_time_ns.to_string(),
        })
        .collect();
    if json {
        return Ok(Outcome::json(&rows));
    }
    let mut lines = vec![format!(
        "{:<10} {:>12} {:<16} {:>14} {:>14} {:>14}",
        "engine", "m", "ring", "mults", "adds", "best ns"
    )];
    lines.extend(rows.iter().map(|r| {
        format!(
            "{:<10} {:>12} {:<16} {:>14} {:>14} {:>14}",
            r.engine.as_str(),
            r.m,
            r.ring,
            r.multiplications,
            r.additions,
            r.wall_time_ns
        )
    }));
    Ok(Outcome::plain(lines.join("\n")))
}
