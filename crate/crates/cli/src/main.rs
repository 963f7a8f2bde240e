//! `pythparam`: evaluate, invert and verify the integer-valued polynomial
//! parametrization of Pythagorean triples.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 budget exceeded.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use pythparam::inverse::{four_square, preimage};
use pythparam::param::{build_symbolic_f, eval_f, eval_positive, eval_positive_16};
use pythparam::verify::{
    check_image_box, check_positive_surjectivity, check_surjectivity, check_symbolic, enumerate_triples,
    SweepOptions, VerificationReport,
};
use pythparam::{Budgets, Error, ParamPoint4, PythTriple, SixteenParams};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pythparam", version, about = "Integer-valued polynomial parametrization of Pythagorean triples")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(flatten)]
    budgets: BudgetArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    /// Newline-delimited JSON records with a fixed key order.
    Structured,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Maximum residue-box points for integer-valuedness checks.
    #[arg(long, global = true, env = "PYTHPARAM_RESIDUE_BUDGET", default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    residue_budget: u64,

    /// Largest n accepted by four-square decomposition.
    #[arg(long, global = true, env = "PYTHPARAM_FOURSQUARE_BUDGET", default_value_t = 100_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    foursquare_budget: u64,

    /// Largest bound accepted by enumeration and surjectivity sweeps.
    #[arg(long, global = true, env = "PYTHPARAM_ENUMERATE_BUDGET", default_value_t = 10_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    enumerate_budget: u64,

    /// Largest radius accepted by the image-box sweep.
    #[arg(long, global = true, env = "PYTHPARAM_IMAGE_RADIUS_BUDGET", default_value_t = 30,
          value_parser = clap::value_parser!(u64).range(1..))]
    image_radius_budget: u64,

    /// Wall-clock limit for a verification sweep, in seconds.
    #[arg(long, global = true, env = "PYTHPARAM_TIME_LIMIT",
          value_parser = clap::value_parser!(u64).range(1..))]
    time_limit: Option<u64>,
}

impl BudgetArgs {
    fn to_budgets(&self) -> Budgets {
        Budgets {
            residue_box: self.residue_budget,
            four_square: self.foursquare_budget,
            enumerate_bound: self.enumerate_budget,
            image_radius: self.image_radius_budget,
            sweep_time: self.time_limit.map(Duration::from_secs),
            ..Budgets::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the four-variable parametrization at (x, y, z, w).
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(value_parser = parse_int)]
        x: BigInt,
        #[arg(value_parser = parse_int)]
        y: BigInt,
        #[arg(value_parser = parse_int)]
        z: BigInt,
        #[arg(value_parser = parse_int)]
        w: BigInt,
    },
    /// Find parameters (x, y, z, w) mapping to a given Pythagorean triple.
    #[command(allow_negative_numbers = true)]
    Invert {
        #[arg(value_parser = parse_int)]
        x: BigInt,
        #[arg(value_parser = parse_int)]
        y: BigInt,
        #[arg(value_parser = parse_int)]
        z: BigInt,
    },
    /// Evaluate the positive parametrization: `x y z w` with x, y, z >= 1 and
    /// w >= 0, or with --sixteen the free parameters x1..x4 y1..y4 z1..z4 w1..w4.
    #[command(allow_negative_numbers = true)]
    Positive {
        #[arg(long)]
        sixteen: bool,
        #[arg(value_parser = parse_int, required = true)]
        values: Vec<BigInt>,
    },
    /// Write n as a sum of four squares.
    #[command(allow_negative_numbers = true)]
    Foursquare {
        #[arg(value_parser = parse_int)]
        n: BigInt,
    },
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// List every Pythagorean triple with max(|x|, |y|, |z|) <= bound.
    Enumerate {
        bound: u64,
        /// Comma-separated rows with an `x,y,z` header.
        #[arg(long)]
        csv: bool,
    },
    /// Print the polynomials f, g, h in the textual polynomial format.
    Formulas,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyMode {
    /// eval(preimage(t)) = t for every triple in the box (needs --bound).
    #[arg(long, requires = "bound")]
    surjective: bool,
    /// Integral Pythagorean image over [-radius, radius]^4 (needs --radius).
    #[arg(long, requires = "radius")]
    image: bool,
    /// Positive round trips for every positive triple with z <= zbound (needs --zbound).
    #[arg(long, requires = "zbound")]
    positive: bool,
    /// Symbolic identity, integer-valuedness and transcription checks.
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    mode: VerifyMode,

    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    radius: Option<u64>,
    #[arg(long)]
    zbound: Option<u64>,

    /// Worker threads for sweeps; 1 runs serially.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Check every k-th image-box point against the symbolic polynomials.
    #[arg(long, default_value_t = 97, value_parser = clap::value_parser!(u64).range(1..))]
    sample_every: u64,
    /// Leave elapsed time out of structured output.
    #[arg(long)]
    no_timing: bool,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|_| format!("not an integer: {s:?}"))
}

#[derive(Serialize)]
struct TripleRecord {
    x: String,
    y: String,
    z: String,
}

impl From<&PythTriple> for TripleRecord {
    fn from(t: &PythTriple) -> Self {
        TripleRecord {
            x: t.x().to_string(),
            y: t.y().to_string(),
            z: t.z().to_string(),
        }
    }
}

#[derive(Serialize)]
struct PointRecord {
    x: String,
    y: String,
    z: String,
    w: String,
}

#[derive(Serialize)]
struct FourSquareRecord {
    n: String,
    roots: [String; 4],
}

#[derive(Serialize)]
struct FormulaRecord {
    f: String,
    g: String,
    h: String,
}

enum Failure {
    Usage(String),
    Budget(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let structured = cli.format == Format::Structured;
    let budgets = cli.budgets.to_budgets();
    let mut emit = |human: String, record: String| {
        let line = if structured { record } else { human };
        // a closed pipe is not worth a panic
        let _ = writeln!(out, "{line}");
    };

    match cli.command {
        Command::Eval { x, y, z, w } => {
            let t = eval_f(&ParamPoint4 { x, y, z, w });
            emit(t.to_string(), json(&TripleRecord::from(&t)));
        }
        Command::Invert { x, y, z } => {
            let t = PythTriple::new(x, y, z)?;
            let p = preimage(&t);
            let back = eval_f(&p);
            if structured {
                emit(
                    String::new(),
                    json(&PointRecord {
                        x: p.x.to_string(),
                        y: p.y.to_string(),
                        z: p.z.to_string(),
                        w: p.w.to_string(),
                    }),
                );
            } else {
                emit(p.to_string(), String::new());
                emit(format!("check: eval{p} = {back}"), String::new());
            }
        }
        Command::Positive { sixteen, values } => {
            let t = if sixteen {
                if values.len() != 16 {
                    return Err(Failure::Usage(format!("--sixteen takes 16 integers, got {}", values.len())));
                }
                eval_positive_16(&SixteenParams::from_slice(&values)?)
            } else {
                let [x, y, z, w] = <[BigInt; 4]>::try_from(values)
                    .map_err(|v| Failure::Usage(format!("positive takes 4 integers x y z w, got {}", v.len())))?;
                eval_positive(&x, &y, &z, &w)?
            };
            emit(t.to_string(), json(&TripleRecord::from(t.triple())));
        }
        Command::Foursquare { n } => {
            let fs = four_square(&n, budgets.four_square)?;
            let roots = fs.roots().clone().map(|r| r.to_string());
            let sum: Vec<String> = roots.iter().map(|r| format!("{r}^2")).collect();
            if structured {
                emit(String::new(), json(&FourSquareRecord { n: n.to_string(), roots }));
            } else {
                emit(fs.to_string(), String::new());
                emit(format!("{} = {n}", sum.join(" + ")), String::new());
            }
        }
        Command::Verify(args) => {
            let jobs = args
                .jobs
                .map(|j| j as usize)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let opts = SweepOptions {
                jobs,
                sample_every: args.sample_every,
                budgets: budgets.clone(),
            };
            let report: VerificationReport = if args.mode.surjective {
                check_surjectivity(args.bound.expect("required by clap"), &opts)?
            } else if args.mode.image {
                check_image_box(args.radius.expect("required by clap"), &opts)?
            } else if args.mode.positive {
                check_positive_surjectivity(args.zbound.expect("required by clap"), &opts)?
            } else {
                check_symbolic(&budgets)?
            };
            if structured {
                emit(String::new(), report.to_json_line(!args.no_timing));
            } else {
                emit(report.summary(), String::new());
                for (k, v) in &report.counts {
                    emit(format!("  {k}: {v}"), String::new());
                }
                for f in &report.failures {
                    emit(format!("  FAIL {}: expected {}, got {}", f.input, f.expected, f.got), String::new());
                }
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Enumerate { bound, csv } => {
            let triples = enumerate_triples(bound, budgets.enumerate_bound)?;
            if csv {
                emit("x,y,z".into(), "x,y,z".into());
            }
            for t in &triples {
                let line = if csv {
                    format!("{},{},{}", t.x(), t.y(), t.z())
                } else if structured {
                    json(&TripleRecord::from(t))
                } else {
                    t.to_string()
                };
                emit(line.clone(), line);
            }
        }
        Command::Formulas => {
            let s = build_symbolic_f();
            if structured {
                emit(
                    String::new(),
                    json(&FormulaRecord {
                        f: s.f.to_string(),
                        g: s.g.to_string(),
                        h: s.h.to_string(),
                    }),
                );
            } else {
                emit(format!("f = {}", s.f), String::new());
                emit(format!("g = {}", s.g), String::new());
                emit(format!("h = {}", s.h), String::new());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
