//! Pass/fail bookkeeping shared by every axiom suite.
//!
//! Failures are data, not errors: a suite always runs to completion and
//! reports, per law, how many tuples were examined, how many failed, and the
//! first failing tuple in rendered form. Witnesses are strings on purpose —
//! they cross every carrier type in the crate and their job is to be printed
//! and compared in regression tests, not to be computed with.

use std::fmt;

/// First failing tuple of a law, with the values that broke it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The inputs, e.g. `(x=1, x1=1, x2=2)`.
    pub tuple: String,
    /// What was observed, e.g. `lhs=0.75 > rhs=0.6931471805599453`.
    pub observed: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.tuple, self.observed)
    }
}

/// Result of checking one named law over a sample.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub law: String,
    /// Tuples examined.
    pub cases: usize,
    /// Tuples that violated the law.
    pub failures: usize,
    /// First violation, if any.
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} cases)", self.law, self.cases)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} cases), first witness {}",
                self.law,
                self.failures,
                self.cases,
                self.witness.as_ref().expect("failing law keeps a witness"),
            )
        }
    }
}

/// Outcomes of all laws in one suite.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl AxiomReport {
    pub fn new(suite: impl Into<String>) -> Self {
        AxiomReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    /// Look up one law's outcome by name.
    pub fn law(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.law == name)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.law.as_str()).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Accumulator for scanning one law over many tuples. Counts every failure
/// but keeps only the first witness.
pub(crate) struct LawScan {
    law: String,
    cases: usize,
    failures: usize,
    witness: Option<Witness>,
}

impl LawScan {
    pub fn new(law: impl Into<String>) -> Self {
        LawScan { law: law.into(), cases: 0, failures: 0, witness: None }
    }

    /// Record one case; `witness` is only invoked on the first failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn finish(self) -> CheckOutcome {
        CheckOutcome {
            law: self.law,
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

/// Render a tuple of named values for a witness, e.g. `(x=0.5, y=1)`.
macro_rules! witness_tuple {
    ($($name:ident = $val:expr),+ $(,)?) => {{
        let parts: Vec<String> = vec![$(format!("{}={:?}", stringify!($name), $val)),+];
        format!("({})", parts.join(", "))
    }};
}
pub(crate) use witness_tuple;
