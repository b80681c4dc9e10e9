//! Command-line harness: `verify` builds a wired instance, audits every
//! structure it uses, and sweeps the sharp bound; `audit` exercises the
//! law suites against the reference carriers without an instance.
//!
//! Exit codes: 0 — everything passed; 1 — a verdict failed (a bound was
//! not dominated or sharp, an audit law broke, or an expected-failure
//! fixture did not fail); 2 — configuration or usage error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ostrowski_core::harness::{
    emit, run, run_audit, AuditSuite, ConfigError, InstanceKind, OmegaKind, OutputFormat,
    RunConfig,
};

#[derive(Parser)]
#[command(
    name = "ostrowski",
    version,
    about = "Verify sharp deviation bounds for averaging operators on distance spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an instance, audit its structures, and sweep the bound.
    Verify(VerifyArgs),
    /// Run law-suite audits against the reference carriers.
    Audit(AuditArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// TOML run configuration; individual flags below override its fields.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Instance to verify (required unless --config provides one).
    #[arg(long, value_enum)]
    instance: Option<InstanceKind>,

    /// Comma-separated sweep points in [-1, 1], e.g. --sweep=-1,0,0.5
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "T,T,...")]
    sweep: Option<Vec<f64>>,

    /// Number of uniform grid nodes on [-1, 1].
    #[arg(long, value_name = "N")]
    grid_nodes: Option<usize>,

    /// Master seed; every random stream is derived from it by name.
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,

    /// Randomized trials per batched audit.
    #[arg(long, value_name = "N")]
    trials: Option<usize>,

    /// Numerical tolerance for sharpness and domination verdicts.
    #[arg(long, value_name = "TOL")]
    tolerance: Option<f64>,

    /// Modulus of continuity defining the function class.
    #[arg(long, value_enum)]
    omega: Option<OmegaKind>,

    /// Report format.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,

    /// Write the report to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// Law family to exercise.
    #[arg(long, value_enum, default_value_t = AuditSuite::All)]
    suite: AuditSuite,

    /// Master seed for the sample streams.
    #[arg(long, value_name = "SEED", default_value_t = 42)]
    seed: u64,
}

fn build_config(args: &VerifyArgs) -> Result<RunConfig, ConfigError> {
    let mut cfg = match (&args.config, args.instance) {
        (Some(path), _) => RunConfig::from_toml_file(path)?,
        (None, Some(instance)) => RunConfig::defaults_for(instance),
        (None, None) => {
            return Err(ConfigError::Parse(
                "pass --config <FILE> or --instance <KIND>".into(),
            ))
        }
    };
    if let Some(instance) = args.instance {
        cfg.instance = instance;
    }
    if let Some(sweep) = &args.sweep {
        cfg.sweep = sweep.clone();
    }
    if let Some(grid_nodes) = args.grid_nodes {
        cfg.grid_nodes = grid_nodes;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(trials) = args.trials {
        cfg.trials = trials;
    }
    if let Some(tolerance) = args.tolerance {
        cfg.tolerance = tolerance;
    }
    if let Some(omega) = args.omega {
        cfg.omega = omega;
    }
    if let Some(format) = args.format {
        cfg.output_format = format;
    }
    Ok(cfg)
}

fn verify(args: &VerifyArgs) -> i32 {
    let config = match build_config(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let rendered = emit(&report);
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    } else {
        print!("{rendered}");
    }
    let status = if report.passed() { "pass" } else { "FAIL" };
    eprintln!(
        "verify {}: {} sweep rows, {} audit suites, {} expected failures — {status}",
        config.instance,
        report.rows.len(),
        report.audits.len(),
        report.counterexamples.len(),
    );
    if report.passed() {
        0
    } else {
        1
    }
}

fn audit(args: &AuditArgs) -> i32 {
    let outcome = run_audit(args.suite, args.seed);
    for suite in &outcome.suites {
        println!("{suite}");
    }
    for fixture in &outcome.counterexamples {
        println!("{fixture}");
    }
    let status = if outcome.passed() { "pass" } else { "FAIL" };
    eprintln!(
        "audit {}: {} suites, {} expected failures — {status}",
        args.suite,
        outcome.suites.len(),
        outcome.counterexamples.len(),
    );
    if outcome.passed() {
        0
    } else {
        1
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(args) => verify(args),
        Command::Audit(args) => audit(args),
    };
    std::process::exit(code);
}
