//! `bilap` — reproducible verification runs for the sharp log/log-log
//! inequalities, the obstacle solver and the Littlewood-Paley machinery.
//!
//! Every subcommand writes a JSON report record (inputs, FNV-1a config hash,
//! artifact list, named assertions) plus CSV tables, all atomically
//! (temp file + rename) under the output root (`--out`, or `$BILAP_OUT`,
//! default `.`). Wall times are printed to stderr only, so identical configs
//! produce byte-identical artifacts.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 internal
//! error.

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Ctx, ReportRecord};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    /// JSON records and CSV tables.
    Tables,
    /// Tables plus SVG plots.
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "bilap", version, about = "sharp log/log-log inequality verification runs")]
struct Cli {
    /// Output root; falls back to $BILAP_OUT, then the current directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tables)]
    format: Format,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scan the energy curves and certify C_alpha (and C_lambda).
    Scan {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 1200)]
        grid_n: usize,
    },
    /// Closed-form minimizer at one contact point x.
    Minimizer {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        x: f64,
    },
    /// Log-log extremal family quotient and its limit estimate.
    Extremal {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
        #[arg(long, default_value_t = 1.0)]
        c0: f64,
    },
    /// Sharpness sequence H_n up to n-max.
    Sharpness {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1_000_000)]
        n_max: u64,
    },
    /// FEM obstacle solve cross-validated against the closed form.
    SolveObstacle {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 1024)]
        grid_n: usize,
    },
    /// Littlewood-Paley split chain on a named corpus.
    Dyadic {
        #[arg(long)]
        alpha: f64,
        /// calibration | validation | all
        #[arg(long, default_value = "all")]
        corpus: String,
    },
    /// Scaling, global log and low/high corollaries.
    Global {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Run a suite of configs and merge a per-theorem summary.
    ReportAll {
        /// JSON file: an array of argv arrays; omitted = built-in suite.
        #[arg(long)]
        suite: Option<PathBuf>,
    },
}

fn out_root(cli: &Cli) -> PathBuf {
    cli.out
        .clone()
        .or_else(|| std::env::var_os("BILAP_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<ReportRecord, CliError> {
    match cmd {
        Command::Scan { alpha, lambda, grid_n } => commands::scan(ctx, *alpha, *lambda, *grid_n),
        Command::Minimizer { alpha, x } => commands::minimizer_cmd(ctx, *alpha, *x),
        Command::Extremal { alpha, eps, c0 } => commands::extremal_cmd(ctx, *alpha, *eps, *c0),
        Command::Sharpness { alpha, n_max } => commands::sharpness(ctx, *alpha, *n_max),
        Command::SolveObstacle { alpha, x, grid_n } => {
            commands::solve_obstacle(ctx, *alpha, *x, *grid_n)
        }
        Command::Dyadic { alpha, corpus } => commands::dyadic_cmd(ctx, *alpha, corpus),
        Command::Global { alpha, lambda } => commands::global_cmd(ctx, *alpha, *lambda),
        Command::ReportAll { .. } => Err(CliError::Usage("report-all cannot nest".into())),
    }
}

/// Built-in desk-scale suite covering every experiment.
fn default_suite() -> Vec<Vec<String>> {
    let item = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
    vec![
        item("scan --alpha 0.5"),
        item("minimizer --alpha 0.5 --x 0.25"),
        item("extremal --alpha 0.5 --eps 1e-8"),
        item("sharpness --alpha 0.5 --n-max 1000000"),
        item("solve-obstacle --alpha 0.5 --x 0.25 --grid-n 512"),
        item("dyadic --alpha 0.5 --corpus all"),
        item("global --alpha 0.5"),
    ]
}

fn report_all(root: &PathBuf, suite: &Option<PathBuf>, svg: bool) -> Result<bool, CliError> {
    let items: Vec<Vec<String>> = match suite {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("--suite: cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("--suite: invalid JSON: {e}")))?
        }
        None => default_suite(),
    };
    let mut records = Vec::new();
    let mut all_pass = true;
    for (idx, item) in items.iter().enumerate() {
        let argv = std::iter::once("bilap".to_string()).chain(item.iter().cloned());
        let sub = Cli::try_parse_from(argv)
            .map_err(|e| CliError::Usage(format!("suite item {idx}: {e}")))?;
        if matches!(sub.cmd, Command::ReportAll { .. }) {
            return Err(CliError::Usage(format!("suite item {idx}: report-all cannot nest")));
        }
        let name = item.first().cloned().unwrap_or_default();
        let ctx = Ctx { out: root.join(format!("item-{idx:02}-{name}")), svg };
        let t0 = std::time::Instant::now();
        let rec = execute(&sub.cmd, &ctx)?;
        eprintln!(
            "[{idx:02}] {name}: {} ({} assertions, {:.1}s)",
            if rec.passed() { "pass" } else { "FAIL" },
            rec.assertions.len(),
            t0.elapsed().as_secs_f64()
        );
        for a in rec.assertions.iter().filter(|a| !a.pass) {
            eprintln!("    FAIL {}: {}", a.name, a.detail);
        }
        all_pass &= rec.passed();
        records.push(rec);
    }
    commands::write_summary(root, &records)?;
    Ok(all_pass)
}

fn main() {
    let cli = Cli::parse();
    let root = out_root(&cli);
    let svg = cli.format == Format::Svg;
    let result = match &cli.cmd {
        Command::ReportAll { suite } => report_all(&root, suite, svg),
        other => {
            let ctx = Ctx { out: root.clone(), svg };
            let t0 = std::time::Instant::now();
            execute(other, &ctx).map(|rec| {
                eprintln!(
                    "{}: {} ({} assertions, {:.1}s)",
                    rec.experiment,
                    if rec.passed() { "pass" } else { "FAIL" },
                    rec.assertions.len(),
                    t0.elapsed().as_secs_f64()
                );
                for a in rec.assertions.iter().filter(|a| !a.pass) {
                    eprintln!("    FAIL {}: {}", a.name, a.detail);
                }
                rec.passed()
            })
        }
    };
    std::process::exit(match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            2
        }
        Err(CliError::Internal(m)) => {
            eprintln!("error: {m}");
            3
        }
    });
}
