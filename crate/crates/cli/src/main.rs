//! `btkit`: runs verification suites and writes JSON or markdown reports.

mod markdown;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use suites::{Failure, Suite};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Markdown,
}

#[derive(Parser, Debug)]
#[command(name = "btkit", version, about = "Verification suites for the braids-and-ties algebra and its quotients")]
struct Args {
    /// Suite to run.
    #[arg(value_enum)]
    suite: Option<Suite>,
    /// Suite to run, as a flag.
    #[arg(long = "suite", value_enum)]
    suite_flag: Option<Suite>,
    /// Number of strands (first value when --n-max is given).
    #[arg(long)]
    n: Option<usize>,
    /// Run every n from --n up to this value.
    #[arg(long)]
    n_max: Option<usize>,
    /// Values of √u for specialized runs, e.g. 5/7,3/2.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    points: Vec<BigRational>,
    /// Worker threads.
    #[arg(long, env = "BTKIT_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let q: BigRational = text.trim().parse().map_err(|e| format!("{text:?} is not a rational number: {e}"))?;
    let u = &q * &q;
    if q == BigRational::from_integer(0.into()) || u == BigRational::from_integer(1.into()) {
        return Err(format!("√u = {text} is not a generic value"));
    }
    Ok(q)
}

#[derive(Serialize)]
struct Config {
    ns: Vec<usize>,
    points: Vec<String>,
    seed: u64,
}

#[derive(Serialize)]
struct Report {
    schema_version: u32,
    suite: Suite,
    config: Config,
    passed: bool,
    failures: Vec<Failure>,
    results: Vec<serde_json::Value>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let suite = match (args.suite, args.suite_flag) {
        (Some(a), Some(b)) if a != b => return usage("conflicting suite names"),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return usage("no suite given (relations, quotient, rank, trace)"),
    };
    let first = args.n.unwrap_or(3);
    let last = args.n_max.unwrap_or(first);
    if last < first {
        return usage("--n-max is smaller than --n");
    }
    let (lo, hi) = suite.bounds();
    if first < lo || last > hi {
        return usage(&format!("{} supports {lo} <= n <= {hi}", suite.name()));
    }
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return usage("--jobs must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return usage(&e.to_string());
        }
    }
    let points = if args.points.is_empty() {
        suites::default_points()
    } else {
        args.points.clone()
    };

    let mut failures = Vec::new();
    let mut results = Vec::new();
    for n in first..=last {
        match suites::run(suite, n, &points, args.seed) {
            Ok((value, mut f)) => {
                results.push(value);
                failures.append(&mut f);
            }
            Err(e) => failures.push(Failure {
                n,
                check: "run".into(),
                detail: e.to_string(),
            }),
        }
    }
    let report = Report {
        schema_version: SCHEMA_VERSION,
        suite,
        config: Config {
            ns: (first..=last).collect(),
            points: points.iter().map(|p| p.to_string()).collect(),
            seed: args.seed,
        },
        passed: failures.is_empty(),
        failures,
        results,
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("report serializes") + "\n",
        Format::Markdown => markdown::render(&value),
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
