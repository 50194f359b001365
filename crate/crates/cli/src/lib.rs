//! Argument parsing and dispatch for the `quatlat` command.
//!
//! [`dispatch`] never prints; it returns the exit code and the payload so
//! the binary and the tests share one code path.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use quatlat::arith::{four_squares, two_squares};
use quatlat::cross::cross3;
use quatlat::euclid::{divmod, gcd};
use quatlat::experiment::{
    igama_check, semiprime_factor_attempt, semiprime_pair_fraction, GcdConvention,
};
use quatlat::factor::{factor_modelled, pall_right_divisors, PrimeModel};
use quatlat::lattice::{
    orthogonal_basis, representations, BasisKind, EnumBound, RepresentationKind,
};
use quatlat::verify::{run_all, run_suite, SuiteOutcome, VerifyConfig};
use quatlat::{parse_gaussian, parse_quaternion, Error, GaussianInteger, HurwitzQuaternion, Side};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "quatlat",
    version,
    about = "Exact Hurwitz quaternion arithmetic and experiments"
)]
struct Cli {
    /// Emit a single JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration bound on norms (overrides QUATLAT_ENUM_BOUND).
    #[arg(long, global = true, value_name = "B")]
    bound: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write N as a sum of four squares.
    Foursq {
        n: BigInt,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a prime P = 2 or P ≡ 1 (mod 4) as a sum of two squares.
    Twosq {
        p: BigInt,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Product A·B.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Norm of A.
    Norm {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Conjugate of A.
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Inner product A·B.
    Dot {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Vector product A × B × C.
    Cross {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// One-sided gcd with Bézout witnesses.
    Gcd {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Division with remainder: right gives A = B·q + r, left A = q·B + r.
    Divmod {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Basis of the Lipschitz vectors orthogonal to a primitive A.
    Orthobasis {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// All quaternions of norm N.
    Reps {
        n: u64,
        /// Include half-odd (Hurwitz) elements.
        #[arg(long)]
        hurwitz: bool,
    },
    /// Lipschitz right divisors of A with norm M.
    Pall {
        #[arg(allow_hyphen_values = true)]
        a: String,
        m: BigInt,
    },
    /// Factorization of A modelled on an ordered list of primes.
    Factor {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_delimiter = ',', required = true)]
        model: Vec<BigInt>,
    },
    /// Compare (iγ, γ) with gcd(z, w) for γ = z + wj.
    Igama {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Semiprime gcd experiments.
    Experiment {
        #[command(subcommand)]
        which: ExperimentCommand,
    },
    /// Run theorem property suites (`all` or a suite name).
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per sampled suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ExperimentCommand {
    /// Exact fraction of pairs of norm P·Q with a proper common divisor.
    Fraction {
        p: BigInt,
        q: BigInt,
        #[arg(long, value_enum)]
        convention: ConventionArg,
        #[command(flatten)]
        threads: Threads,
    },
    /// Random four-squares pairs of norm N and their gcds.
    Montecarlo {
        n: BigInt,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(Args, Debug)]
struct Threads {
    /// Worker threads; results do not depend on this value.
    #[arg(long, value_name = "T")]
    threads: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConventionArg {
    Right,
    Left,
    Either,
}

impl From<ConventionArg> for GcdConvention {
    fn from(c: ConventionArg) -> GcdConvention {
        match c {
            ConventionArg::Right => GcdConvention::Right,
            ConventionArg::Left => GcdConvention::Left,
            ConventionArg::Either => GcdConvention::Either,
        }
    }
}

/// A finished command: plain text, the JSON object, and whether the
/// command's own check passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(kind: &str, text: impl Into<String>, fields: Value) -> Self {
        let mut map = Map::new();
        map.insert("kind".into(), json!(kind));
        if let Value::Object(f) = fields {
            map.extend(f);
        }
        Output {
            text: text.into(),
            json: Value::Object(map),
            ok: true,
        }
    }
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn quat(text: &str) -> Result<HurwitzQuaternion, Error> {
    parse_quaternion(text)
}

fn gaussian(text: &str) -> Result<GaussianInteger, Error> {
    parse_gaussian(text)
}

fn with_threads<T: Send>(threads: &Threads, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    match threads.threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn side_name(side: Side) -> &'static str {
    side.name()
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let bound = match cli.bound {
        Some(b) => EnumBound(b),
        None => EnumBound::from_env()?,
    };
    Ok(match &cli.command {
        Command::Foursq { n, seed } => {
            let v = four_squares(n, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            let text = v
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            Output::new(
                "foursq",
                text,
                json!({"n": s(n), "seed": s(seed), "squares": v.iter().map(s).collect::<Vec<_>>()}),
            )
        }
        Command::Twosq { p, seed } => {
            let (a, b) = two_squares(p, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            Output::new(
                "twosq",
                format!("{a} {b}"),
                json!({"p": s(p), "seed": s(seed), "squares": [s(&a), s(&b)]}),
            )
        }
        Command::Mul { a, b } => {
            let r = quat(a)? * quat(b)?;
            Output::new(
                "mul",
                r.to_string(),
                json!({"a": a, "b": b, "product": s(&r)}),
            )
        }
        Command::Norm { a } => {
            let n = quat(a)?.norm();
            Output::new("norm", n.to_string(), json!({"a": a, "norm": s(&n)}))
        }
        Command::Conj { a } => {
            let c = quat(a)?.conj();
            Output::new("conj", c.to_string(), json!({"a": a, "conjugate": s(&c)}))
        }
        Command::Dot { a, b } => {
            let d = quat(a)?.inner_product(&quat(b)?);
            Output::new("dot", d.to_string(), json!({"a": a, "b": b, "dot": s(&d)}))
        }
        Command::Cross { a, b, c } => {
            let r = cross3(&quat(a)?, &quat(b)?, &quat(c)?);
            Output::new(
                "cross",
                r.to_string(),
                json!({"a": a, "b": b, "c": c, "cross": s(&r),
                       "numerators": r.numerators.iter().map(s).collect::<Vec<_>>(),
                       "denominator": s(&r.denominator)}),
            )
        }
        Command::Gcd { side, a, b } => {
            let side = Side::from(*side);
            let g = gcd(&quat(a)?, &quat(b)?, side)?;
            let text = format!("gcd {}\nx {}\ny {}", g.gcd, g.bezout_x, g.bezout_y);
            Output::new(
                "gcd",
                text,
                json!({"a": a, "b": b, "side": side_name(side), "gcd": s(&g.gcd), "norm": s(g.gcd.norm()),
                       "bezout_x": s(&g.bezout_x), "bezout_y": s(&g.bezout_y)}),
            )
        }
        Command::Divmod { side, a, b } => {
            let side = Side::from(*side);
            let d = divmod(&quat(a)?, &quat(b)?, side)?;
            let text = format!("quotient {}\nremainder {}", d.quotient, d.remainder);
            Output::new(
                "divmod",
                text,
                json!({"a": a, "b": b, "side": side_name(side), "quotient": s(&d.quotient),
                       "remainder": s(&d.remainder), "remainder_norm": s(d.remainder.norm())}),
            )
        }
        Command::Orthobasis { a } => {
            let basis = orthogonal_basis(&quat(a)?)?;
            let kind = match basis.kind {
                BasisKind::Paired => "paired",
                BasisKind::ScalarPairZero => "scalar-pair-zero",
                BasisKind::VectorPairZero => "vector-pair-zero",
            };
            let text = basis
                .beta
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Output::new(
                "orthobasis",
                text,
                json!({"a": a, "basis": basis.beta.iter().map(s).collect::<Vec<_>>(), "basis_kind": kind,
                       "g1": s(&basis.g1), "g2": s(&basis.g2), "x0": s(&basis.x0), "y0": s(&basis.y0),
                       "z0": s(&basis.z0), "t0": s(&basis.t0)}),
            )
        }
        Command::Reps { n, hurwitz } => {
            let kind = if *hurwitz {
                RepresentationKind::Hurwitz
            } else {
                RepresentationKind::Lipschitz
            };
            let reps = representations(*n, kind, bound)?;
            let mut text = format!("{} representations", reps.len());
            for r in &reps {
                text.push('\n');
                text.push_str(&r.to_string());
            }
            Output::new(
                "reps",
                text,
                json!({"n": s(n), "hurwitz": hurwitz, "count": s(reps.len()),
                       "representations": reps.iter().map(s).collect::<Vec<_>>()}),
            )
        }
        Command::Pall { a, m } => {
            let r = pall_right_divisors(&quat(a)?, m, bound)?;
            let mut text = format!(
                "{} divisors, exactly eight: {}, pairwise left-associated: {}",
                r.divisors.len(),
                r.exactly_eight,
                r.pairwise_left_associated
            );
            for d in &r.divisors {
                text.push('\n');
                text.push_str(&d.to_string());
            }
            let mut out = Output::new(
                "pall",
                text,
                json!({"a": a, "m": s(m), "divisors": r.divisors.iter().map(s).collect::<Vec<_>>(),
                       "exactly_eight": r.exactly_eight, "pairwise_left_associated": r.pairwise_left_associated}),
            );
            out.ok = r.exactly_eight && r.pairwise_left_associated;
            out
        }
        Command::Factor { a, model } => {
            let model = PrimeModel::new(model.clone())?;
            let f = factor_modelled(&quat(a)?, &model)?;
            let text = f
                .factors
                .iter()
                .map(|p| format!("({p})"))
                .collect::<Vec<_>>()
                .join(" ");
            Output::new(
                "factor",
                text,
                json!({"a": a, "model": model.primes().iter().map(s).collect::<Vec<_>>(),
                       "factors": f.factors.iter().map(s).collect::<Vec<_>>(),
                       "norms": f.factors.iter().map(|p| s(p.norm())).collect::<Vec<_>>()}),
            )
        }
        Command::Igama { z, w } => {
            let r = igama_check(&gaussian(z)?, &gaussian(w)?)?;
            let text = format!(
                "ideal trivial: {}\ncoprime: {}\ngcld norm: {}",
                r.ideal_trivial, r.coprime, r.gcld_norm
            );
            Output::new(
                "igama",
                text,
                json!({"z": z, "w": w, "ideal_trivial": r.ideal_trivial, "coprime": r.coprime,
                       "gcld_norm": s(&r.gcld_norm), "agrees": r.agrees()}),
            )
        }
        Command::Experiment { which } => experiment(which, bound)?,
        Command::Check {
            suite,
            seed,
            samples,
        } => check(
            suite,
            VerifyConfig {
                seed: *seed,
                bound,
                samples: *samples,
            },
        )?,
    })
}

fn histogram(h: &std::collections::BTreeMap<BigInt, u64>) -> Value {
    Value::Object(h.iter().map(|(k, v)| (k.to_string(), s(v))).collect())
}

fn experiment(which: &ExperimentCommand, bound: EnumBound) -> Result<Output, Error> {
    Ok(match which {
        ExperimentCommand::Fraction {
            p,
            q,
            convention,
            threads,
        } => {
            let conv = GcdConvention::from(*convention);
            let r = with_threads(threads, || semiprime_pair_fraction(p, q, conv, bound))??;
            let text = format!(
                "convention {}: {}/{} pairs = {}\npredicted (p+q+2)/((p+1)(q+1)) = {}\nmatches: {}\nmean shared primes (right gcd) = {}",
                conv.name(),
                r.nontrivial_pairs,
                r.total_pairs,
                r.fraction,
                r.paper_prediction,
                r.matches_prediction,
                r.mean_shared_primes
            );
            Output::new(
                "experiment-fraction",
                text,
                json!({"p": s(p), "q": s(q), "n": s(&r.n), "convention": conv.name(),
                       "total_pairs": s(r.total_pairs), "nontrivial_pairs": s(r.nontrivial_pairs),
                       "fraction": s(&r.fraction), "paper_prediction": s(&r.paper_prediction),
                       "matches_prediction": r.matches_prediction,
                       "right_gcd_norms": histogram(&r.right_gcd_norms),
                       "left_gcd_norms": histogram(&r.left_gcd_norms),
                       "mean_shared_primes": s(&r.mean_shared_primes)}),
            )
        }
        ExperimentCommand::Montecarlo {
            n,
            trials,
            seed,
            threads,
        } => {
            let r = with_threads(threads, || semiprime_factor_attempt(n, *trials, *seed))??;
            let factors: Vec<String> = r.recovered_factors.iter().map(|f| f.to_string()).collect();
            let mut text = format!(
                "{} trials: right {} left {} either {}\nrecovered factors: {}",
                r.trials,
                r.successes_right,
                r.successes_left,
                r.successes_either,
                if factors.is_empty() {
                    "none".to_string()
                } else {
                    factors.join(" ")
                }
            );
            if r.degenerate {
                text.push_str("\nnote: n is the square of a prime");
            }
            Output::new(
                "experiment-montecarlo",
                text,
                json!({"n": s(n), "trials": s(trials), "seed": s(seed),
                       "successes": {"right": s(r.successes_right), "left": s(r.successes_left), "either": s(r.successes_either)},
                       "success_rate": {"right": s(r.success_rate(GcdConvention::Right)),
                                        "left": s(r.success_rate(GcdConvention::Left)),
                                        "either": s(r.success_rate(GcdConvention::Either))},
                       "recovered_factors": factors, "degenerate": r.degenerate}),
            )
        }
    })
}

fn check(suite: &str, config: VerifyConfig) -> Result<Output, Error> {
    let outcomes: Vec<SuiteOutcome> = if suite == "all" {
        run_all(&config)?
    } else {
        vec![run_suite(suite, &config)?]
    };
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{:<10} {status} {} cases: {}\n",
            o.name, o.cases, o.detail
        ));
    }
    text.push_str(&format!("{passed}/{} suites passed", outcomes.len()));
    let suites: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({"name": o.name, "passed": o.passed, "cases": s(o.cases), "detail": o.detail}))
        .collect();
    let mut out = Output::new(
        "check",
        text,
        json!({"suite": suite, "seed": s(config.seed), "bound": s(config.bound.0),
               "samples": s(config.samples), "suites": suites,
               "passed": s(passed), "failed": s(outcomes.len() - passed)}),
    );
    out.ok = passed == outcomes.len();
    Ok(out)
}

fn error_result(err: &Error, json_mode: bool) -> CommandResult {
    let exit_code = match err {
        Error::Parse { .. } | Error::MixedParity => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    };
    let payload = if json_mode {
        json!({"kind": "error", "error": err.name(), "message": err.to_string()}).to_string()
    } else {
        format!("error: {}: {err}", err.name())
    };
    CommandResult { exit_code, payload }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json_mode = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let payload = if json_mode && exit_code == EXIT_USAGE {
                json!({"kind": "error", "error": "UsageError", "message": e.to_string().trim_end()})
                    .to_string()
            } else {
                e.render().to_string().trim_end().to_string()
            };
            return CommandResult { exit_code, payload };
        }
    };
    match run(&cli) {
        Ok(out) => CommandResult {
            exit_code: if out.ok { EXIT_OK } else { EXIT_DOMAIN },
            payload: if cli.json {
                out.json.to_string()
            } else {
                out.text
            },
        },
        Err(e) => error_result(&e, cli.json),
    }
}
