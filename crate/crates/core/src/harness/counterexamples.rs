//! Expected-failure fixtures, run as first-class regression checks: each
//! entry names a structure that is supposed to break one specific law,
//! and the entry passes only when that failure actually occurs — at the
//! designated witness where one is pinned.

use std::fmt;
use std::sync::Arc;

use crate::distance::{
    agreement_witness_sample, check_agreement, check_distance_axioms, check_e_axioms,
    check_metric_axioms, discrete_witness_sample, fixtures, log_ratio_sample, Tier,
};
use crate::engine::check_monotone;
use crate::instances::builders::build_scalar_instance;
use crate::instances::grid::Grid;
use crate::lipschitz::{
    check_class_membership, check_modulus_axioms, controls as modulus_controls, identity_modulus,
    SampledFunction,
};
use crate::order::{check_monoid_axioms, check_poset_axioms, controls as order_controls};
use crate::report::{AxiomReport, Witness};
use crate::sample::{stream_seed, Sample, DEFAULT_TUPLE_BUDGET};

/// Result of running one expected-failure fixture.
#[derive(Debug, Clone)]
pub struct CounterexampleOutcome {
    /// Stable fixture identifier.
    pub name: &'static str,
    /// What is supposed to break.
    pub expectation: &'static str,
    /// True iff exactly the expected law failed (with the designated
    /// witness where one is pinned) and every other audited law held.
    pub failed_as_expected: bool,
    /// The witness of the expected failure, when it occurred.
    pub witness: Option<Witness>,
}

impl CounterexampleOutcome {
    pub fn passed(&self) -> bool {
        self.failed_as_expected
    }
}

impl fmt::Display for CounterexampleOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failed_as_expected {
            let witness = self.witness.as_ref().map(|w| w.to_string());
            write!(
                f,
                "{}: failed as expected ({}) at {}",
                self.name,
                self.expectation,
                witness.as_deref().unwrap_or("<no witness recorded>"),
            )
        } else {
            write!(f, "{}: DID NOT fail as expected ({})", self.name, self.expectation)
        }
    }
}

fn outcome_from_law(
    name: &'static str,
    expectation: &'static str,
    report: &AxiomReport,
    law: &str,
    others_must_pass: bool,
    pinned_tuple: Option<&str>,
) -> CounterexampleOutcome {
    let target = report.law(law);
    let target_failed = target.map(|c| !c.passed()).unwrap_or(false);
    let witness = target.and_then(|c| c.witness.clone());
    let tuple_matches = match (pinned_tuple, &witness) {
        (Some(expected), Some(w)) => w.tuple == expected,
        (Some(_), None) => false,
        (None, _) => true,
    };
    let others_ok = !others_must_pass
        || report.checks.iter().filter(|c| c.law != law).all(|c| c.passed());
    CounterexampleOutcome {
        name,
        expectation,
        failed_as_expected: target_failed && tuple_matches && others_ok,
        witness,
    }
}

/// Run the whole expected-failure roster. Deterministic in `seed`: the
/// designated witnesses come from fixed samples, and the remaining scans
/// derive their streams from the seed by name.
pub fn run_counterexamples(seed: u64) -> Vec<CounterexampleOutcome> {
    let budget = DEFAULT_TUPLE_BUDGET;
    let mut out = Vec::new();

    // A ratio-based distance that satisfies every metric law yet fails
    // the agreement condition with itself: the strength tiers are
    // genuinely independent.
    {
        let d = fixtures::controls::log_ratio();
        let metric = check_metric_axioms(&d, &log_ratio_sample(stream_seed(seed, "ratio"), 200), budget);
        let agreement = check_agreement(&d, &d, &agreement_witness_sample(), budget);
        let mut outcome = outcome_from_law(
            "ratio-distance-self-agreement",
            "metric laws hold, self-agreement fails at (1, 1, 2) with 3/4 vs ln 2",
            &agreement,
            "agreement",
            true,
            Some("(x=1.0, x1=1.0, x2=2.0)"),
        );
        outcome.failed_as_expected &= metric.passed();
        out.push(outcome);
    }

    // The discrete 0/1 distance is a metric, but as the ambient distance
    // on the value monoid it breaks agreement for absolute difference:
    // the jump to 1 overshoots the separation of nearby points.
    {
        let d = fixtures::absdiff_line(Tier::Metric);
        let ambient = fixtures::controls::discrete_on_reals();
        let ambient_is_metric = check_metric_axioms(&ambient, &discrete_witness_sample(), budget);
        let agreement = check_agreement(&d, &ambient, &discrete_witness_sample(), budget);
        let mut outcome = outcome_from_law(
            "discrete-ambient-agreement",
            "agreement under a discrete ambient distance fails at (0.25, 0.25, 0.5)",
            &agreement,
            "agreement",
            true,
            Some("(x=0.25, x1=0.25, x2=0.5)"),
        );
        outcome.failed_as_expected &= ambient_is_metric.passed();
        out.push(outcome);
    }

    // Squared difference: symmetric and diagonal-vanishing, but the
    // triangle law collapses at collinear points.
    {
        let report = check_metric_axioms(
            &fixtures::controls::squared_diff(),
            &fixtures::controls::squared_diff_sample(),
            budget,
        );
        out.push(outcome_from_law(
            "squared-difference-triangle",
            "triangle law fails at (0, 2, 1): 4 > 1 + 1",
            &report,
            "triangle",
            true,
            Some("(x=0.0, y=2.0, z=1.0)"),
        ));
    }

    // A constant positive distance cannot vanish on the diagonal.
    {
        let report = check_distance_axioms(
            &fixtures::controls::constant_one(),
            &Sample::from_elements(vec![0.0, 1.0], 0),
            budget,
        );
        out.push(outcome_from_law(
            "constant-distance-diagonal",
            "self-distance fails: h(x, x) = 1, never the zero element",
            &report,
            "self-distance",
            false,
            Some("(x=0.0)"),
        ));
    }

    // Declaring every pair related destroys antisymmetry.
    {
        let report = check_poset_axioms(
            &order_controls::always_leq(),
            &Sample::dyadic_nonneg(stream_seed(seed, "always-leq"), 60),
            budget,
        );
        out.push(outcome_from_law(
            "always-related-order",
            "antisymmetry fails: distinct elements relate both ways",
            &report,
            "antisymmetry",
            false,
            None,
        ));
    }

    // Absolute difference as the addition keeps θ neutral but translation
    // can reverse an order relation.
    {
        let report = check_monoid_axioms(
            &order_controls::absdiff_plus(),
            &Sample::dyadic_nonneg(stream_seed(seed, "absdiff-plus"), 60),
            budget,
        );
        out.push(outcome_from_law(
            "absolute-difference-addition",
            "order-translation fails while θ stays neutral",
            &report,
            "order-translation",
            false,
            None,
        ));
    }

    // ω(m) = m² grows gaps instead of contracting them.
    {
        let report = check_modulus_axioms(
            &modulus_controls::square_modulus(),
            &Sample::dyadic_nonneg(stream_seed(seed, "square-modulus"), 60),
            budget,
        );
        out.push(outcome_from_law(
            "squared-modulus-semi-additivity",
            "semi-additivity fails; vanishing at θ and monotonicity hold",
            &report,
            "semi-additive",
            true,
            None,
        ));
    }

    // A gauge that ignores its second argument cannot characterize the
    // order: e(x, x) should vanish but equals x.
    {
        let report = check_e_axioms(
            &fixtures::controls::first_component_e(),
            &Sample::dyadic_nonneg(stream_seed(seed, "first-component"), 60),
            budget,
        );
        out.push(outcome_from_law(
            "first-component-gauge",
            "order characterization fails for the second-argument-blind gauge",
            &report,
            "order-characterization",
            false,
            None,
        ));
    }

    // A majorant that reads a window gap instead of accumulating mass is
    // not monotone: enlarging the input can shrink the gap.
    {
        let grid = Grid::uniform(-1.0, 1.0, 257).expect("valid grid").into_shared();
        let window_gap = crate::engine::OperatorQuadruple::new(
            Arc::clone(&grid),
            |_: &SampledFunction<f64, f64>| 0.0,
            |g: &SampledFunction<f64, f64>| g.eval(&0.0) - g.eval(&-1.0),
            |m: &f64| *m,
            |m: &f64| *m,
        );
        let u = SampledFunction::new(Arc::clone(&grid), |_: &f64| 0.0);
        let v = SampledFunction::new(Arc::clone(&grid), |t: &f64| t.abs());
        let report = check_monotone(&window_gap, &[(u, v)], &crate::order::nonneg_reals());
        out.push(outcome_from_law(
            "window-gap-majorant",
            "monotonicity fails on a pointwise-dominated pair",
            &report,
            "majorant-monotone",
            false,
            Some("(pair=0)"),
        ));
    }

    // A slope-2 function is not in the unit-Lipschitz class, and the
    // membership scan says so at the first grid pair.
    {
        let inst = build_scalar_instance(Grid::uniform(-1.0, 1.0, 257).expect("valid grid"));
        let f = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| 2.0 * t);
        let report = check_class_membership(&f, &inst.dt, &inst.dx, &identity_modulus(), &0.0);
        out.push(outcome_from_law(
            "too-steep-member",
            "class membership fails for a slope-2 function",
            &report,
            "lipschitz-membership",
            false,
            None,
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_fails_exactly_as_expected() {
        let outcomes = run_counterexamples(42);
        assert_eq!(outcomes.len(), 10);
        for o in &outcomes {
            assert!(o.passed(), "{o}");
        }
    }

    #[test]
    fn designated_witnesses_are_pinned() {
        let outcomes = run_counterexamples(42);
        let ratio = outcomes.iter().find(|o| o.name == "ratio-distance-self-agreement").unwrap();
        let w = ratio.witness.as_ref().unwrap();
        assert_eq!(w.tuple, "(x=1.0, x1=1.0, x2=2.0)");
        assert!(w.observed.contains("0.75"));
        assert!(w.observed.contains(&std::f64::consts::LN_2.to_string()));

        let discrete = outcomes.iter().find(|o| o.name == "discrete-ambient-agreement").unwrap();
        assert_eq!(discrete.witness.as_ref().unwrap().tuple, "(x=0.25, x1=0.25, x2=0.5)");

        let squared = outcomes.iter().find(|o| o.name == "squared-difference-triangle").unwrap();
        assert_eq!(squared.witness.as_ref().unwrap().tuple, "(x=0.0, y=2.0, z=1.0)");
    }

    #[test]
    fn roster_is_deterministic_per_seed() {
        let a = run_counterexamples(7);
        let b = run_counterexamples(7);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.failed_as_expected, y.failed_as_expected);
            assert_eq!(
                x.witness.as_ref().map(|w| w.tuple.clone()),
                y.witness.as_ref().map(|w| w.tuple.clone())
            );
        }
    }
}
