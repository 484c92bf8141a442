use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use mdz::export::{self, Format, Object};
use mdz::scan::{scan, DEFAULT_ORDER_CAP};
use mdz::{suites, Report, Target, WeightRange};

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "mdz", version, about = "Exact checks for depth-graded motivic zeta values at level two")]
struct Cli {
    /// Emit the JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the randomized property suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite over a range of weights.
    Verify {
        target: Target,
        /// Inclusive range such as `8..40`.
        #[arg(long, conflicts_with_all = ["min_weight", "max_weight"])]
        weights: Option<WeightRange>,
        #[arg(long)]
        min_weight: Option<u32>,
        #[arg(long)]
        max_weight: Option<u32>,
        /// Depth for the `tran` target.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Cases per property for the `properties` target.
        #[arg(long, default_value_t = 256)]
        cases: usize,
    },
    /// Report order, rank and invertibility of E on T_{N,r} for N ≤ max weight.
    Scan {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        max_weight: u32,
        /// Skip instances with |T_{N,r}| above this; overrides MDZ_ORDER_CAP.
        #[arg(long)]
        order_cap: Option<u128>,
    },
    /// Write a matrix or basis as exact rational cells.
    Export {
        object: Object,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (default: stdout).
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn order_cap(flag: Option<u128>) -> Result<u128, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("MDZ_ORDER_CAP") {
        Ok(v) => v.trim().parse().map_err(|e| format!("MDZ_ORDER_CAP={v:?}: {e}")),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn verify(cli: &Cli, target: Target, range: WeightRange, depth: usize, cases: usize) -> ExitCode {
    let start = Instant::now();
    let results = if target == Target::Properties {
        suites::properties(cli.seed, cases)
    } else {
        if target == Target::Tran && depth < 3 {
            return usage("tran needs --depth ≥ 3");
        }
        match range.weights(target, depth) {
            Ok(ws) => suites::run(target, &ws, depth),
            Err(e) => return usage(e),
        }
    };
    let command = std::env::args().skip(1).collect();
    let report = Report::new(command, results, start.elapsed().as_millis());
    if cli.json {
        emit(&(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"));
    } else {
        emit(&report.table());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: &Cli) -> ExitCode {
    match &cli.command {
        Command::Verify { target, weights, min_weight, max_weight, depth, cases } => {
            let default = target.default_range(*depth);
            let range = weights.unwrap_or(WeightRange {
                lo: min_weight.unwrap_or(default.lo),
                hi: max_weight.unwrap_or(default.hi),
            });
            verify(cli, *target, range, *depth, *cases)
        }
        Command::Scan { depth, max_weight, order_cap: flag } => {
            if *depth < 3 {
                return usage("scan needs --depth ≥ 3");
            }
            let cap = match order_cap(*flag) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let findings = scan(*depth, *max_weight, cap);
            let lines: String =
                findings.iter().map(|f| serde_json::to_string(f).expect("finding serializes") + "\n").collect();
            emit(&lines);
            if !cli.json {
                let singular = findings.iter().filter(|f| f.invertible == Some(false)).count();
                let skipped = findings.iter().filter(|f| f.skipped).count();
                eprintln!("{} instances, {singular} singular, {skipped} over the order cap {cap}", findings.len());
            }
            ExitCode::SUCCESS
        }
        Command::Export { object, weight, depth, format, output } => {
            let cells = match export::cells(*object, *weight, *depth) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let text = export::render(&cells, *format);
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => emit(&text),
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return usage("--jobs must be at least 1");
        }
        pool = pool.num_threads(j);
    }
    match pool.build() {
        Ok(pool) => pool.install(|| run(&cli)),
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            ExitCode::FAILURE
        }
    }
}
