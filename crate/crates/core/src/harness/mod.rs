//! The verification harness: configuration, full instance runs, standalone
//! structure audits, the expected-failure roster, and report rendering.
//!
//! A run is driven entirely by a [`RunConfig`] — instance choice, sweep
//! points, grid resolution, master seed, trial count, tolerance, modulus,
//! and output format — and produces a [`RunReport`] whose contents are a
//! pure function of that config. [`run`] wires the chosen instance,
//! audits every structure it is built from, sweeps the bound with its
//! extremal witness at each requested point, and batches randomized
//! domination trials. [`run_audit`] exercises the same law suites against
//! the reference carriers without building an instance, and
//! [`run_counterexamples`] drives the fixtures that must fail. [`emit`]
//! renders a report as CSV or Markdown with byte-stable output.

pub mod audits;
pub mod config;
pub mod counterexamples;
pub mod emit;
pub mod run;

pub use audits::{run_audit, AuditOutcome, AuditSuite};
pub use config::{ConfigError, InstanceKind, OmegaKind, OutputFormat, RunConfig};
pub use counterexamples::{run_counterexamples, CounterexampleOutcome};
pub use emit::{emit, emit_csv, emit_markdown};
pub use run::{run, HarnessError, RunReport, SweepRow};
