//! Standalone structure audits, independent of any wired instance: pick a
//! family of laws, sample the reference carriers, and report. This backs
//! the CLI's `audit` subcommand; full runs embed the same suites wired to
//! the configured instance instead.

use rand::Rng;

use crate::distance::fixtures::controls;
use crate::distance::{
    check_agreement, check_distance_axioms, check_e_axioms, check_metric_axioms, fixtures,
    log_ratio_sample, metric_from_e, truncated_diff, truncated_diff_vec, Tier,
};
use crate::harness::counterexamples::{run_counterexamples, CounterexampleOutcome};
use crate::instances::sets::FiniteSet;
use crate::lipschitz::{
    cbrt_modulus, check_modulus_axioms, identity_modulus, sqrt_modulus, vec_power_modulus,
};
use crate::order::{check_monoid_axioms, check_poset_axioms, nonneg_reals, nonneg_vectors};
use crate::report::AxiomReport;
use crate::sample::{dyadic_real, stream_seed, Sample, DEFAULT_TUPLE_BUDGET};

/// Which family of laws the `audit` subcommand exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "lower")]
pub enum AuditSuite {
    Poset,
    Monoid,
    Distance,
    Metric,
    Modulus,
    Counterexamples,
    All,
}

impl AuditSuite {
    pub fn name(&self) -> &'static str {
        match self {
            AuditSuite::Poset => "poset",
            AuditSuite::Monoid => "monoid",
            AuditSuite::Distance => "distance",
            AuditSuite::Metric => "metric",
            AuditSuite::Modulus => "modulus",
            AuditSuite::Counterexamples => "counterexamples",
            AuditSuite::All => "all",
        }
    }
}

impl std::fmt::Display for AuditSuite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything one audit invocation produced.
#[derive(Debug, Clone)]
pub struct AuditOutcome {
    pub suites: Vec<AxiomReport>,
    pub counterexamples: Vec<CounterexampleOutcome>,
}

impl AuditOutcome {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(AxiomReport::passed)
            && self.counterexamples.iter().all(CounterexampleOutcome::passed)
    }
}

fn named(mut report: AxiomReport, label: impl Into<String>) -> AxiomReport {
    report.suite = label.into();
    report
}

fn real_sample(seed: u64, label: &str) -> Sample<f64> {
    Sample::dyadic_reals(stream_seed(seed, label), 200)
}

fn nonneg_sample(seed: u64, label: &str) -> Sample<f64> {
    Sample::dyadic_nonneg(stream_seed(seed, label), 200)
}

fn pair_sample(seed: u64, label: &str) -> Sample<Vec<f64>> {
    Sample::dyadic_real_vecs(stream_seed(seed, label), 120, 2)
}

fn nonneg_pair_sample(seed: u64, label: &str) -> Sample<Vec<f64>> {
    Sample::dyadic_nonneg_vecs(stream_seed(seed, label), 120, 2)
}

fn set_sample(seed: u64, label: &str) -> Sample<FiniteSet> {
    Sample::generate(stream_seed(seed, label), 80, |rng| {
        let n = rng.gen_range(1..=6);
        FiniteSet::new((0..n).map(|_| dyadic_real(rng)).collect()).expect("finite dyadic points")
    })
}

fn poset_suites(seed: u64) -> Vec<AxiomReport> {
    let budget = DEFAULT_TUPLE_BUDGET;
    vec![
        named(
            check_poset_axioms(&nonneg_reals(), &nonneg_sample(seed, "poset-reals"), budget),
            "poset(nonneg-reals)",
        ),
        named(
            check_poset_axioms(&nonneg_vectors(2), &nonneg_pair_sample(seed, "poset-pairs"), budget),
            "poset(nonneg-pairs)",
        ),
    ]
}

fn monoid_suites(seed: u64) -> Vec<AxiomReport> {
    let budget = DEFAULT_TUPLE_BUDGET;
    vec![
        named(
            check_monoid_axioms(&nonneg_reals(), &nonneg_sample(seed, "monoid-reals"), budget),
            "monoid(nonneg-reals)",
        ),
        named(
            check_monoid_axioms(
                &nonneg_vectors(2),
                &nonneg_pair_sample(seed, "monoid-pairs"),
                budget,
            ),
            "monoid(nonneg-pairs)",
        ),
    ]
}

fn distance_suites(seed: u64) -> Vec<AxiomReport> {
    let budget = DEFAULT_TUPLE_BUDGET;
    let line = fixtures::absdiff_line(Tier::PseudoMetric);
    let plane = fixtures::euclidean(2);
    let channels = fixtures::absdiff_componentwise(2);
    let sets = fixtures::hausdorff_sets();
    let ambient = fixtures::absdiff_line(Tier::PseudoMetric);
    let ambient_pairs = fixtures::absdiff_componentwise(2);

    let reals = real_sample(seed, "distance-reals");
    let pairs = pair_sample(seed, "distance-pairs");
    let sets_sample = set_sample(seed, "distance-sets");

    vec![
        named(check_distance_axioms(&line, &reals, budget), "distance(line)"),
        named(check_agreement(&line, &ambient, &reals, budget), "agreement(line)"),
        named(check_distance_axioms(&plane, &pairs, budget), "distance(plane)"),
        named(check_agreement(&plane, &ambient, &pairs, budget), "agreement(plane)"),
        named(check_distance_axioms(&channels, &pairs, budget), "distance(channels)"),
        named(check_agreement(&channels, &ambient_pairs, &pairs, budget), "agreement(channels)"),
        named(check_distance_axioms(&sets, &sets_sample, budget), "distance(hausdorff)"),
        named(check_agreement(&sets, &ambient, &sets_sample, budget), "agreement(hausdorff)"),
    ]
}

fn metric_suites(seed: u64) -> Vec<AxiomReport> {
    let budget = DEFAULT_TUPLE_BUDGET;
    let reals = real_sample(seed, "metric-reals");
    let nonneg = nonneg_sample(seed, "metric-nonneg");
    let nonneg_pairs = nonneg_pair_sample(seed, "metric-nonneg-pairs");
    let ratio_points = log_ratio_sample(stream_seed(seed, "metric-ratio"), 200);

    vec![
        named(
            check_metric_axioms(&fixtures::absdiff_line(Tier::Metric), &reals, budget),
            "metric(line)",
        ),
        named(
            check_metric_axioms(&controls::discrete_on_reals(), &reals, budget),
            "metric(discrete)",
        ),
        named(
            check_metric_axioms(&controls::log_ratio(), &ratio_points, budget),
            "metric(log-ratio)",
        ),
        named(
            check_metric_axioms(&metric_from_e(&truncated_diff()), &nonneg, budget),
            "metric(symmetrized-gauge)",
        ),
        named(check_e_axioms(&truncated_diff(), &nonneg, budget), "gauge(truncated-diff)"),
        named(
            check_metric_axioms(&metric_from_e(&truncated_diff_vec(2)), &nonneg_pairs, budget),
            "metric(symmetrized-gauge-pairs)",
        ),
        named(
            check_e_axioms(&truncated_diff_vec(2), &nonneg_pairs, budget),
            "gauge(truncated-diff-pairs)",
        ),
    ]
}

fn modulus_suites(seed: u64) -> Vec<AxiomReport> {
    let budget = DEFAULT_TUPLE_BUDGET;
    let nonneg = nonneg_sample(seed, "modulus-nonneg");
    let nonneg_pairs = nonneg_pair_sample(seed, "modulus-nonneg-pairs");
    vec![
        named(check_modulus_axioms(&identity_modulus(), &nonneg, budget), "modulus(identity)"),
        named(check_modulus_axioms(&sqrt_modulus(), &nonneg, budget), "modulus(sqrt)"),
        named(check_modulus_axioms(&cbrt_modulus(), &nonneg, budget), "modulus(cbrt)"),
        named(
            check_modulus_axioms(&vec_power_modulus(0.5, 2), &nonneg_pairs, budget),
            "modulus(sqrt-pairs)",
        ),
    ]
}

/// Run the selected audit family with streams derived from `seed`.
pub fn run_audit(suite: AuditSuite, seed: u64) -> AuditOutcome {
    let mut suites = Vec::new();
    let mut counterexamples = Vec::new();
    match suite {
        AuditSuite::Poset => suites.extend(poset_suites(seed)),
        AuditSuite::Monoid => suites.extend(monoid_suites(seed)),
        AuditSuite::Distance => suites.extend(distance_suites(seed)),
        AuditSuite::Metric => suites.extend(metric_suites(seed)),
        AuditSuite::Modulus => suites.extend(modulus_suites(seed)),
        AuditSuite::Counterexamples => counterexamples = run_counterexamples(seed),
        AuditSuite::All => {
            suites.extend(poset_suites(seed));
            suites.extend(monoid_suites(seed));
            suites.extend(distance_suites(seed));
            suites.extend(metric_suites(seed));
            suites.extend(modulus_suites(seed));
            counterexamples = run_counterexamples(seed);
        }
    }
    AuditOutcome { suites, counterexamples }
}
