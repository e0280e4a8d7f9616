//! `qident`: verify the registered identities over parameter grids, compute
//! single exact values, and dump truncated series.
//!
//! Exit codes: 0 when every asserted check passes, 1 when one fails, 2 on
//! usage errors, unknown cases and I/O failures.

mod render;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qident::identities::{self, limit_case, run_grid, GridSpec, Limit, MAX_ORDER};
use qident::partitions::{build_a, count_pd, APolyParams, PartitionQuery};
use qident::qseries::qbinom;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qident",
    version,
    about = "Exact verification of alternating binomial and q-binomial sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check cases over a parameter grid.
    Verify(VerifyArgs),
    /// Print one exact value.
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Compare a finite q-sum with its infinite product to a given order.
    Series {
        /// L1, L2, L3 or PRODID.
        which: String,
        #[arg(long, default_value_t = 40)]
        order: usize,
    },
    /// List the registered cases.
    List,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Comma-separated case ids, or `all`.
    #[arg(default_value = "all")]
    cases: String,
    /// Inclusive n range, `a..b` or a single value.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "1..4")]
    n: RangeInclusive<i64>,
    /// Inclusive m range, `a..b` or a single value.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0..6")]
    m: RangeInclusive<i64>,
    /// Truncation order for the limit cases.
    #[arg(long, default_value_t = 40)]
    order: usize,
    /// Also write the JSON report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads; overrides QIDENT_JOBS.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Record per-point wall-clock times (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum ComputeCmd {
    /// Gaussian binomial [n, m].
    Qbinom {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// Partitions of N into exactly M distinct parts from [a, b].
    Pd {
        #[arg(allow_negative_numbers = true)]
        total: i64,
        a: i64,
        b: i64,
        parts: i64,
    },
    /// The polynomial A_{n,m,k,r}(q).
    #[command(name = "A", alias = "a")]
    A { n: i64, m: i64, k: i64, r: i64 },
    /// 2^{m/2} cos(m pi/4).
    Cc4 {
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// 3^{m/2} cos(m pi/6).
    Cc6 {
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn job_count(flag: Option<usize>) -> Result<usize, String> {
    if let Some(j) = flag {
        return if j == 0 {
            Err("--jobs must be positive".into())
        } else {
            Ok(j)
        };
    }
    if let Ok(v) = std::env::var("QIDENT_JOBS") {
        return match v.trim().parse::<usize>() {
            Ok(j) if j > 0 => Ok(j),
            _ => Err(format!("QIDENT_JOBS must be a positive integer, got `{v}`")),
        };
    }
    Ok(std::thread::available_parallelism().map_or(1, usize::from))
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cases = match identities::resolve_cases(&args.cases) {
        Ok(c) if !c.is_empty() => c,
        Ok(_) => return usage("no cases selected"),
        Err(e) => {
            let known: Vec<&str> = identities::registry().iter().map(|c| c.id).collect();
            return usage(format!("{e}; known cases: {}", known.join(", ")));
        }
    };
    if args.order > MAX_ORDER {
        return usage(format!(
            "--order {} exceeds the maximum {MAX_ORDER}",
            args.order
        ));
    }
    let jobs = match job_count(args.jobs) {
        Ok(j) => j,
        Err(e) => return usage(e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return usage(format!("cannot start {jobs} workers: {e}")),
    };
    let grid = GridSpec {
        n: args.n,
        m: args.m,
        order: args.order,
    };
    let report = pool.install(|| run_grid(&cases, &grid, args.timing));
    let json = report.to_json();
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            return usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    match args.format {
        Format::Json => println!("{json}"),
        Format::Human => print!("{}", render::human(&report)),
    }
    if report.has_failures() {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_compute(cmd: ComputeCmd) -> ExitCode {
    let out = match cmd {
        ComputeCmd::Qbinom { n, m } => Ok(qbinom(n, m).to_string()),
        ComputeCmd::Pd { total, a, b, parts } => {
            count_pd(&PartitionQuery::new(total, a, b, parts)).map(|v| v.to_string())
        }
        ComputeCmd::A { n, m, k, r } => {
            APolyParams::new(n, m, k, r).map(|p| build_a(&p).to_string())
        }
        ComputeCmd::Cc4 { m } => Ok(qident::exact::cc4(m).to_string()),
        ComputeCmd::Cc6 { m } => Ok(qident::exact::cc6(m).to_string()),
    };
    match out {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn cmd_series(which: &str, order: usize) -> ExitCode {
    let limit: Limit = match which.parse() {
        Ok(l) => l,
        Err(_) => {
            return usage(format!(
                "unknown series `{which}`; expected L1, L2, L3 or PRODID"
            ))
        }
    };
    let (lhs, rhs) = match limit_case(limit, order) {
        Ok(sides) => sides,
        Err(e) => return usage(e),
    };
    let equal = lhs == rhs;
    println!("{limit} to order {order}");
    println!("lhs: {lhs}");
    println!("rhs: {rhs}");
    println!("verdict: {}", if equal { "equal" } else { "unequal" });
    if equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Compute(cmd) => cmd_compute(cmd),
        Command::Series { which, order } => cmd_series(&which, order),
        Command::List => {
            print!("{}", render::case_list());
            ExitCode::SUCCESS
        }
    }
}
