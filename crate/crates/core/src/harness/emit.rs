//! Render a run report as CSV (sweep table only) or Markdown (sweep plus
//! every audit). Output is byte-stable: same report, same bytes, LF line
//! endings throughout. Floats use the shortest representation that
//! round-trips, so `0.5` stays `0.5` and nothing is padded.

use std::fmt::Write as _;

use crate::harness::config::OutputFormat;
use crate::harness::run::{RunReport, SweepRow};

fn verdict_word(v: bool) -> &'static str {
    if v {
        "pass"
    } else {
        "fail"
    }
}

/// The sweep as `t,bound,deviation,gap,verdict` lines. An empty sweep
/// yields just the header line.
pub fn emit_csv(report: &RunReport) -> String {
    let mut out = String::from("t,bound,deviation,gap,verdict\n");
    for SweepRow { t, bound, deviation, gap, verdict } in &report.rows {
        let _ = writeln!(out, "{t},{bound},{deviation},{gap},{}", verdict_word(*verdict));
    }
    out
}

/// The full report: configuration, sweep table, one section per audit
/// suite, the expected-failure roster, and the overall verdict.
pub fn emit_markdown(report: &RunReport) -> String {
    let mut out = String::from("# Verification run\n\n## Configuration\n\n");
    let cfg = &report.config;
    let sweep =
        cfg.sweep.iter().map(|t| format!("{t}")).collect::<Vec<_>>().join(", ");
    let _ = writeln!(out, "- instance: {}", cfg.instance);
    let _ = writeln!(out, "- sweep: [{sweep}]");
    let _ = writeln!(out, "- grid nodes: {}", cfg.grid_nodes);
    let _ = writeln!(out, "- seed: {}", cfg.seed);
    let _ = writeln!(out, "- trials: {}", cfg.trials);
    let _ = writeln!(out, "- tolerance: {}", cfg.tolerance);
    let _ = writeln!(out, "- modulus: {}", cfg.omega);

    out.push_str("\n## Bound sweep\n\n");
    if report.rows.is_empty() {
        out.push_str("No sweep points.\n");
    } else {
        out.push_str("| t | bound | deviation | gap | verdict |\n");
        out.push_str("|---|---|---|---|---|\n");
        for SweepRow { t, bound, deviation, gap, verdict } in &report.rows {
            let _ = writeln!(out, "| {t} | {bound} | {deviation} | {gap} | {} |", verdict_word(*verdict));
        }
    }

    out.push_str("\n## Audits\n");
    for suite in &report.audits {
        let _ = writeln!(out, "\n### {}\n", suite.suite);
        for check in &suite.checks {
            let _ = writeln!(out, "- {check}");
        }
    }

    out.push_str("\n## Expected failures\n\n");
    if report.counterexamples.is_empty() {
        out.push_str("None exercised.\n");
    } else {
        for outcome in &report.counterexamples {
            let _ = writeln!(out, "- {outcome}");
        }
    }

    let _ = write!(out, "\n## Verdict\n\n{}\n", if report.passed() { "PASS" } else { "FAIL" });
    out
}

/// Render in the format the config asked for.
pub fn emit(report: &RunReport) -> String {
    match report.config.output_format {
        OutputFormat::Csv => emit_csv(report),
        OutputFormat::Markdown => emit_markdown(report),
    }
}
