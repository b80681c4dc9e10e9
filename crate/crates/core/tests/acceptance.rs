//! Acceptance gate: one test per promised behavior, each at its stated
//! tolerance and runtime budget. Every test prints nothing on success —
//! the per-test result line is the pass/fail record.

use std::sync::Arc;
use std::time::Instant;

use rand::Rng;

use ostrowski_core::distance::fixtures::{self, controls};
use ostrowski_core::distance::{
    check_agreement, check_metric_axioms, log_ratio_sample, metric_from_e, truncated_diff, Tier,
};
use ostrowski_core::engine::{
    check_domination, corollary_bound_with_projector, extremal_function, homega_bound,
    ostrowski_bound, verify_sharpness,
};
use ostrowski_core::harness::{run, run_audit, run_counterexamples, AuditSuite, InstanceKind, RunConfig};
use ostrowski_core::instances::builders::{
    build_pair_instance, build_scalar_instance, build_setvalued_instance, build_vector_instance,
    default_grid,
};
use ostrowski_core::instances::generators::{
    lipschitz_pair, lipschitz_scalar, lipschitz_sets, lipschitz_vector,
};
use ostrowski_core::instances::sets::FiniteSet;
use ostrowski_core::instances::grid::Grid;
use ostrowski_core::lipschitz::{identity_modulus, sqrt_modulus, SampledFunction};
use ostrowski_core::sample::{dyadic_real, stream_seed, Sample};

const DEFAULT_SWEEP: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

fn sweep_21() -> Vec<f64> {
    (0..=20).map(|k| (k as f64 - 10.0) / 10.0).collect()
}

#[test]
fn classical_bound_is_reproduced_across_a_21_point_sweep() {
    let start = Instant::now();
    let sweep = sweep_21();
    let inst = build_scalar_instance(default_grid(257, &sweep).unwrap());
    for t in &sweep {
        let bound = ostrowski_bound(&inst.quadruple, &inst.dt, t);
        let oracle = (1.0 + t * t) / 2.0;
        assert!(
            (bound - oracle).abs() <= 1e-12,
            "bound {bound} vs closed form {oracle} at t = {t}"
        );
    }
    assert!(start.elapsed().as_secs_f64() < 1.0, "sweep took {:?}", start.elapsed());
}

#[test]
fn extremal_functions_attain_the_bound_on_every_instance() {
    let start = Instant::now();

    let sweep = sweep_21();
    let scalar = build_scalar_instance(default_grid(257, &sweep).unwrap());
    for t in &sweep {
        let report =
            verify_sharpness(&scalar.quadruple, &scalar.dt, &scalar.dy, &scalar.gauge, t, 1e-12)
                .unwrap();
        assert!(report.verdict() && report.gap <= 1e-12, "scalar gap {} at t = {t}", report.gap);
    }

    let vector =
        build_vector_instance(default_grid(257, &DEFAULT_SWEEP).unwrap(), 2, &[0.6, 0.8]).unwrap();
    for t in &DEFAULT_SWEEP {
        let report =
            verify_sharpness(&vector.quadruple, &vector.dt, &vector.dy, &vector.gauge, t, 1e-6)
                .unwrap();
        assert!(report.verdict() && report.gap <= 1e-6, "vector gap {} at t = {t}", report.gap);
    }

    let pair = build_pair_instance(default_grid(257, &DEFAULT_SWEEP).unwrap());
    for t in &DEFAULT_SWEEP {
        let report =
            verify_sharpness(&pair.quadruple, &pair.dt, &pair.dy, &pair.gauge, t, 1e-6).unwrap();
        assert!(report.verdict() && report.gap <= 1e-6, "pair gap {} at t = {t}", report.gap);
    }

    let sets = build_setvalued_instance(default_grid(65, &DEFAULT_SWEEP).unwrap()).unwrap();
    for t in &DEFAULT_SWEEP {
        let report =
            verify_sharpness(&sets.quadruple, &sets.dt, &sets.dy, &sets.gauge, t, 1e-6).unwrap();
        assert!(report.verdict() && report.gap <= 1e-6, "set-valued gap {} at t = {t}", report.gap);
    }

    assert!(start.elapsed().as_secs_f64() < 10.0, "sharpness took {:?}", start.elapsed());
}

#[test]
fn a_thousand_random_members_per_instance_never_exceed_the_bound() {
    let start = Instant::now();
    let trials = 1000;
    let seed = 3;

    let scalar = build_scalar_instance(default_grid(257, &DEFAULT_SWEEP).unwrap());
    let grid = scalar.quadruple.shared_grid();
    let members: Vec<SampledFunction<f64, f64>> = (0..trials)
        .map(|i| lipschitz_scalar(stream_seed(seed, &format!("scalar-{i}")), Arc::clone(&grid)))
        .collect();
    let report = check_domination(
        &scalar.quadruple,
        &scalar.dt,
        &scalar.dy,
        &members,
        &DEFAULT_SWEEP,
        &scalar.gauge,
        1e-9,
    );
    assert!(report.passed(), "scalar domination: {report}");
    assert_eq!(report.law("bound-domination").unwrap().cases, 5 * trials);

    let vector =
        build_vector_instance(default_grid(257, &DEFAULT_SWEEP).unwrap(), 2, &[0.6, 0.8]).unwrap();
    let grid = vector.quadruple.shared_grid();
    let members: Vec<SampledFunction<f64, Vec<f64>>> = (0..trials)
        .map(|i| lipschitz_vector(stream_seed(seed, &format!("vector-{i}")), Arc::clone(&grid), 2))
        .collect();
    let report = check_domination(
        &vector.quadruple,
        &vector.dt,
        &vector.dy,
        &members,
        &DEFAULT_SWEEP,
        &vector.gauge,
        1e-6,
    );
    assert!(report.passed(), "vector domination: {report}");

    let pair = build_pair_instance(default_grid(257, &DEFAULT_SWEEP).unwrap());
    let grid = pair.quadruple.shared_grid();
    let members: Vec<SampledFunction<f64, Vec<f64>>> = (0..trials)
        .map(|i| lipschitz_pair(stream_seed(seed, &format!("pair-{i}")), Arc::clone(&grid)))
        .collect();
    let report = check_domination(
        &pair.quadruple,
        &pair.dt,
        &pair.dy,
        &members,
        &DEFAULT_SWEEP,
        &pair.gauge,
        1e-6,
    );
    assert!(report.passed(), "pair domination: {report}");

    let sets = build_setvalued_instance(default_grid(65, &DEFAULT_SWEEP).unwrap()).unwrap();
    let grid = sets.quadruple.shared_grid();
    let members: Vec<SampledFunction<f64, FiniteSet>> = (0..trials)
        .map(|i| lipschitz_sets(stream_seed(seed, &format!("sets-{i}")), Arc::clone(&grid)))
        .collect();
    let report = check_domination(
        &sets.quadruple,
        &sets.dt,
        &sets.dy,
        &members,
        &DEFAULT_SWEEP,
        &sets.gauge,
        1e-6,
    );
    assert!(report.passed(), "set-valued domination: {report}");

    assert!(start.elapsed().as_secs_f64() < 60.0, "domination took {:?}", start.elapsed());
}

#[test]
fn expected_failures_fail_with_their_known_witnesses() {
    let outcomes = run_counterexamples(42);

    let discrete = outcomes.iter().find(|o| o.name == "discrete-ambient-agreement").unwrap();
    assert!(discrete.passed());
    let witness = discrete.witness.as_ref().unwrap();
    assert_eq!(witness.tuple, "(x=0.25, x1=0.25, x2=0.5)");

    let ratio = outcomes.iter().find(|o| o.name == "ratio-distance-self-agreement").unwrap();
    assert!(ratio.passed());
    let witness = ratio.witness.as_ref().unwrap();
    assert_eq!(witness.tuple, "(x=1.0, x1=1.0, x2=2.0)");
    assert!(witness.observed.contains("0.75"), "observed: {}", witness.observed);
    assert!(
        witness.observed.contains(&std::f64::consts::LN_2.to_string()),
        "observed: {}",
        witness.observed
    );
    assert!(std::f64::consts::LN_2 < 0.75);

    // The ratio distance really does pass the full metric suite first.
    let points = log_ratio_sample(stream_seed(42, "ratio"), 200);
    assert!(check_metric_axioms(&controls::log_ratio(), &points, 10_000).passed());
}

#[test]
fn symmetrized_gauge_reproduces_absolute_difference_and_its_agreement() {
    let gauge = truncated_diff();
    let constructed = metric_from_e(&gauge);

    let values = Sample::dyadic_nonneg(stream_seed(5, "gauge-pairs"), 200);
    let mut pairs = 0usize;
    'outer: for x in &values.elements {
        for y in &values.elements {
            assert_eq!(constructed.eval(x, y), (x - y).abs(), "at ({x}, {y})");
            pairs += 1;
            if pairs >= 10_000 {
                break 'outer;
            }
        }
    }
    assert!(pairs >= 10_000);

    assert!(check_metric_axioms(&constructed, &values, 10_000).passed());

    let reals = Sample::dyadic_reals(stream_seed(5, "gauge-reals"), 200);
    let line = fixtures::absdiff_line(Tier::Metric);
    let line_report = check_agreement(&line, &constructed, &reals, 10_000);
    assert!(line_report.passed(), "{line_report}");
    assert_eq!(line_report.law("agreement").unwrap().cases, 10_000);

    let plane = fixtures::euclidean(2);
    let plane_points = Sample::dyadic_real_vecs(stream_seed(5, "gauge-plane"), 120, 2);
    assert!(check_agreement(&plane, &constructed, &plane_points, 10_000).passed());

    let sets = fixtures::hausdorff_sets();
    let set_points = Sample::generate(stream_seed(5, "gauge-sets"), 80, |rng| {
        let n = rng.gen_range(1..=6);
        FiniteSet::new((0..n).map(|_| dyadic_real(rng)).collect()).unwrap()
    });
    assert!(check_agreement(&sets, &constructed, &set_points, 10_000).passed());
}

#[test]
fn sqrt_modulus_bound_matches_the_closed_form_oracle() {
    let grid = Grid::uniform(-1.0, 1.0, 32_769).unwrap();
    let inst = build_scalar_instance(grid);
    let w = sqrt_modulus();
    let oracle = |x: f64| ((1.0 - x).powf(1.5) + (1.0 + x).powf(1.5)) / 3.0;

    for x in [0.0, 1.0] {
        let report =
            homega_bound(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &w, &x, 1e-6).unwrap();
        assert!(
            (report.bound - oracle(x)).abs() <= 1e-6,
            "bound {} vs oracle {} at x = {x}",
            report.bound,
            oracle(x)
        );
        assert!(report.gap <= 1e-6, "extremal gap {} at x = {x}", report.gap);
    }

    // The identity modulus must reduce to the untransformed path exactly.
    for t in DEFAULT_SWEEP {
        let plain =
            verify_sharpness(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &t, 1e-12).unwrap();
        let routed = homega_bound(
            &inst.quadruple,
            &inst.dt,
            &inst.dy,
            &inst.gauge,
            &identity_modulus(),
            &t,
            1e-12,
        )
        .unwrap();
        assert_eq!(plain, routed, "identity modulus altered the report at t = {t}");
    }
}

#[test]
fn projected_path_is_consistent_for_identity_and_hull_projectors() {
    // Identity projector: the projected report must be the direct report.
    let sweep = sweep_21();
    let scalar = build_scalar_instance(default_grid(257, &sweep).unwrap());
    for t in &sweep {
        let direct =
            verify_sharpness(&scalar.quadruple, &scalar.dt, &scalar.dy, &scalar.gauge, t, 1e-12)
                .unwrap();
        let extremal = extremal_function(&scalar.quadruple, &scalar.dt, t);
        let projected = corollary_bound_with_projector(
            &scalar.quadruple,
            &scalar.dt,
            &scalar.dx,
            &extremal,
            &scalar.gauge,
            t,
            1e-12,
        )
        .unwrap();
        assert_eq!(direct, projected, "identity projector changed the report at t = {t}");
    }

    // Hull projector: hypotheses audited inside the projected bound must
    // hold, and a hundred random set-valued members stay dominated.
    let sets = build_setvalued_instance(default_grid(65, &DEFAULT_SWEEP).unwrap()).unwrap();
    for t in &DEFAULT_SWEEP {
        let extremal = extremal_function(&sets.quadruple, &sets.dt, t);
        let report = corollary_bound_with_projector(
            &sets.quadruple,
            &sets.dt,
            &sets.dx,
            &extremal,
            &sets.gauge,
            t,
            1e-6,
        )
        .unwrap();
        assert!(report.verdict() && report.gap <= 1e-6, "hull gap {} at t = {t}", report.gap);
    }

    let grid = sets.quadruple.shared_grid();
    let members: Vec<SampledFunction<f64, FiniteSet>> = (0..100)
        .map(|i| lipschitz_sets(stream_seed(7, &format!("hull-{i}")), Arc::clone(&grid)))
        .collect();
    let domination = check_domination(
        &sets.quadruple,
        &sets.dt,
        &sets.dy,
        &members,
        &DEFAULT_SWEEP,
        &sets.gauge,
        1e-6,
    );
    assert!(domination.passed(), "{domination}");
    for (i, f) in members.iter().enumerate() {
        for t in &DEFAULT_SWEEP {
            let projected = corollary_bound_with_projector(
                &sets.quadruple,
                &sets.dt,
                &sets.dx,
                f,
                &sets.gauge,
                t,
                1e-6,
            );
            assert!(projected.is_ok(), "member {i} at t = {t}: {projected:?}");
        }
    }
}

#[test]
fn law_suites_pass_at_scale_and_replay_per_seed() {
    let render = |seed: u64| {
        let outcome = run_audit(AuditSuite::All, seed);
        assert!(outcome.passed());
        let mut text = String::new();
        for suite in &outcome.suites {
            text.push_str(&format!("{suite}\n"));
        }
        for fixture in &outcome.counterexamples {
            text.push_str(&format!("{fixture}\n"));
        }
        text
    };
    let first = render(4242);
    let second = render(4242);
    assert_eq!(first, second, "audit output must replay byte-for-byte per seed");
    assert!(first.contains("(10000 cases)"), "budget-sized scans must appear");

    for outcome in run_counterexamples(4242) {
        assert!(outcome.passed(), "{outcome}");
        assert!(outcome.witness.is_some(), "{} lacks a witness", outcome.name);
    }

    // The wired instances pass their in-run audit chains end to end.
    for instance in
        [InstanceKind::Scalar, InstanceKind::Vector, InstanceKind::Pair, InstanceKind::SetValued]
    {
        let mut cfg = RunConfig::defaults_for(instance);
        cfg.trials = 20;
        let report = run(&cfg).unwrap();
        assert!(report.passed(), "run audits failed for {instance}");
    }
}
