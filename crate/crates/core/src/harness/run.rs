//! One full verification run: build the configured instance, audit every
//! structure it is wired from, sweep bounds and sharpness, and batch the
//! randomized domination trials. Everything is deterministic in the
//! config: random streams are derived from the master seed by name.

use std::sync::Arc;

use crate::distance::{check_agreement, check_distance_axioms, check_metric_axioms};
use crate::engine::{
    check_diagram, check_domination, check_embed_membership, check_monotone,
    check_operator_agreement, corollary_bound_with_projector, extremal_function, verify_sharpness,
    BoundReport, EngineError,
};
use crate::harness::config::{ConfigError, InstanceKind, OmegaKind, RunConfig};
use crate::harness::counterexamples::{run_counterexamples, CounterexampleOutcome};
use crate::instances::builders::{
    build_pair_instance, build_scalar_instance, build_setvalued_instance, build_vector_instance,
    default_grid, InstanceError,
};
use crate::instances::generators::{
    lipschitz_pair, lipschitz_scalar, lipschitz_sets, lipschitz_vector,
};
use crate::instances::sets::FiniteSet;
use crate::lipschitz::{
    cbrt_modulus, check_class_membership, check_modulus_axioms, compose, identity_modulus,
    sqrt_modulus, transform_distance, vec_power_modulus, ModulusOfContinuity, SampledFunction,
    MAX_MEMBERSHIP_NODES,
};
use crate::order::{check_monoid_axioms, check_poset_axioms};
use crate::report::{witness_tuple, AxiomReport, LawScan, Witness};
use crate::sample::{dyadic_real, stream_seed, Sample, DEFAULT_TUPLE_BUDGET};

/// Dimension of the vector instance driven by the harness.
pub const VECTOR_DIMENSION: usize = 2;
/// Unit direction the vector instance embeds bounds along.
pub const VECTOR_DIRECTION: [f64; 2] = [0.6, 0.8];

const SCALAR_SAMPLE: usize = 200;
const VECTOR_SAMPLE: usize = 120;
const SET_SAMPLE: usize = 80;
/// Members given the full quadratic-in-grid membership scan.
const MEMBERSHIP_AUDIT_MEMBERS: usize = 10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("instance error: {0}")]
    Instance(#[from] InstanceError),
}

/// One line of the bound sweep. Bound and deviation are rendered
/// strings so one report type serves every value monoid; vector-valued
/// entries join components with `;`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub bound: String,
    pub deviation: String,
    pub gap: f64,
    pub verdict: bool,
}

/// Everything a run produces: the sweep table, the audit suites, and the
/// expected-failure roster.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub config: RunConfig,
    pub rows: Vec<SweepRow>,
    pub audits: Vec<AxiomReport>,
    pub counterexamples: Vec<CounterexampleOutcome>,
}

impl RunReport {
    /// True iff every row verdict, every audit law, and every
    /// expected-failure fixture came out as required.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict)
            && self.audits.iter().all(AxiomReport::passed)
            && self.counterexamples.iter().all(CounterexampleOutcome::passed)
    }
}

/// Build, audit, and sweep the configured instance.
pub fn run(config: &RunConfig) -> Result<RunReport, HarnessError> {
    config.validate()?;
    match config.instance {
        InstanceKind::Scalar => run_scalar(config),
        InstanceKind::Vector => run_vector(config),
        InstanceKind::Pair => run_pair(config),
        InstanceKind::SetValued => run_setvalued(config),
    }
}

fn named(mut report: AxiomReport, label: impl Into<String>) -> AxiomReport {
    report.suite = label.into();
    report
}

/// Fold another report's outcomes into `target`, summing case counts per
/// law and keeping the first witness.
fn merge_checks(target: &mut AxiomReport, piece: AxiomReport) {
    for check in piece.checks {
        match target.checks.iter_mut().find(|c| c.law == check.law) {
            Some(existing) => {
                existing.cases += check.cases;
                existing.failures += check.failures;
                if existing.witness.is_none() {
                    existing.witness = check.witness;
                }
            }
            None => target.checks.push(check),
        }
    }
}

/// Largest factor c with c·d ≤ ω(d) across the whole domain diameter 2;
/// scaling a unit-Lipschitz member by it lands the member in the ω-class.
fn omega_scale(omega: OmegaKind) -> f64 {
    match omega {
        OmegaKind::Id => 1.0,
        OmegaKind::Sqrt => 2f64.sqrt() / 2.0,
        OmegaKind::Cbrt => 2f64.cbrt() / 2.0,
    }
}

fn scalar_omega(omega: OmegaKind) -> ModulusOfContinuity<f64> {
    match omega {
        OmegaKind::Id => identity_modulus(),
        OmegaKind::Sqrt => sqrt_modulus(),
        OmegaKind::Cbrt => cbrt_modulus(),
    }
}

fn pair_omega(omega: OmegaKind) -> ModulusOfContinuity<Vec<f64>> {
    let alpha = match omega {
        OmegaKind::Id => 1.0,
        OmegaKind::Sqrt => 0.5,
        OmegaKind::Cbrt => 1.0 / 3.0,
    };
    vec_power_modulus(alpha, 2)
}

fn render_real(m: &f64) -> String {
    format!("{m}")
}

fn render_vec(m: &Vec<f64>) -> String {
    m.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(";")
}

fn sorted_sweep(config: &RunConfig) -> Vec<f64> {
    let mut sweep = config.sweep.clone();
    sweep.sort_by(f64::total_cmp);
    sweep
}

fn domain_sample(seed: u64) -> Sample<f64> {
    Sample::generate(stream_seed(seed, "domain-sample"), SCALAR_SAMPLE, |rng| dyadic_real(rng) / 2.0)
}

fn row_from<M: std::fmt::Debug>(
    t: f64,
    outcome: Result<BoundReport<f64, M>, EngineError<f64, M>>,
    render: impl Fn(&M) -> String,
) -> SweepRow {
    let report = match outcome {
        Ok(r) => r,
        Err(EngineError::SharpnessFailure(r)) => r,
        Err(EngineError::PConditionViolation(msg)) => {
            return SweepRow {
                t,
                bound: String::new(),
                deviation: msg,
                gap: f64::INFINITY,
                verdict: false,
            };
        }
    };
    SweepRow {
        t,
        bound: render(&report.bound),
        deviation: render(&report.deviation),
        gap: report.gap,
        verdict: report.verdict(),
    }
}

/// Pointwise-dominated pairs of non-negative scalar profiles for the
/// majorant monotonicity audit: u = |fᵢ| and v = u + |fᵢ₊₁|.
fn scalar_monotone_pairs(
    grid: &Arc<Vec<f64>>,
    seed: u64,
    trials: usize,
) -> Vec<(SampledFunction<f64, f64>, SampledFunction<f64, f64>)> {
    (0..trials)
        .map(|i| {
            let f = lipschitz_scalar(stream_seed(seed, &format!("monotone-lo-{i}")), Arc::clone(grid));
            let g = lipschitz_scalar(stream_seed(seed, &format!("monotone-hi-{i}")), Arc::clone(grid));
            let u = compose(&f, |v: &f64| v.abs());
            let u_inner = u.clone();
            let v = SampledFunction::new(Arc::clone(grid), move |t: &f64| {
                u_inner.eval(t) + g.eval(t).abs()
            });
            (u, v)
        })
        .collect()
}

fn run_scalar(config: &RunConfig) -> Result<RunReport, HarnessError> {
    let grid = default_grid(config.grid_nodes, &config.sweep).map_err(InstanceError::Grid)?;
    let inst = build_scalar_instance(grid);
    let q = inst.quadruple.clone();
    let sweep = sorted_sweep(config);
    let tol = config.tolerance;
    let budget = DEFAULT_TUPLE_BUDGET;

    let w = scalar_omega(config.omega);
    let dt_w = match config.omega {
        OmegaKind::Id => inst.dt.clone(),
        _ => transform_distance(&inst.dt, &w),
    };

    let scale = omega_scale(config.omega);
    let members: Vec<SampledFunction<f64, f64>> = (0..config.trials)
        .map(|i| {
            let base =
                lipschitz_scalar(stream_seed(config.seed, &format!("member-{i}")), q.shared_grid());
            if scale == 1.0 {
                base
            } else {
                compose(&base, move |v: &f64| scale * v)
            }
        })
        .collect();

    let m_sample = Sample::dyadic_nonneg(stream_seed(config.seed, "monoid-sample"), SCALAR_SAMPLE);
    let t_sample = domain_sample(config.seed);
    let x_sample = Sample::dyadic_reals(stream_seed(config.seed, "value-sample"), SCALAR_SAMPLE);

    let mut audits = Vec::new();
    audits.push(named(check_poset_axioms(&inst.monoid, &m_sample, budget), "poset(bound-monoid)"));
    audits
        .push(named(check_monoid_axioms(&inst.monoid, &m_sample, budget), "monoid(bound-monoid)"));
    audits.push(named(check_distance_axioms(&inst.dt, &t_sample, budget), "distance(domain)"));
    audits.push(named(check_agreement(&inst.dt, &inst.hm, &t_sample, budget), "agreement(domain)"));
    audits.push(named(check_distance_axioms(&inst.dx, &x_sample, budget), "distance(values)"));
    audits.push(named(check_agreement(&inst.dx, &inst.hm, &x_sample, budget), "agreement(values)"));
    audits.push(named(check_distance_axioms(&inst.hm, &m_sample, budget), "distance(ambient)"));
    audits.push(named(check_agreement(&inst.hm, &inst.hm, &m_sample, budget), "agreement(ambient)"));
    audits.push(named(check_metric_axioms(&inst.hm, &m_sample, budget), "metric(ambient)"));
    audits.push(named(check_modulus_axioms(&w, &m_sample, budget), "modulus(omega)"));

    audits.push(named(
        check_monotone(
            &q,
            &scalar_monotone_pairs(&q.shared_grid(), config.seed, config.trials),
            &inst.monoid,
        ),
        "majorant(monotone)",
    ));

    let mut agreement = AxiomReport::new("operator(member-agreement)");
    for t in &sweep {
        for f in &members {
            merge_checks(
                &mut agreement,
                check_operator_agreement(&q, f, &inst.dx, &inst.dy, &inst.gauge, t, tol),
            );
        }
    }
    audits.push(agreement);

    let mut diagram = AxiomReport::new("diagram(embedding)");
    let probes: Vec<SampledFunction<f64, f64>> =
        members.iter().map(|f| compose(f, |v: &f64| v.abs())).collect();
    for t in &sweep {
        for g in &probes {
            merge_checks(&mut diagram, check_diagram(&q, g, &dt_w, &inst.dy, &inst.gauge, t, tol));
        }
    }
    audits.push(diagram);

    audits.push(named(
        check_embed_membership(&q, &inst.hm, &inst.dy, &m_sample, &inst.gauge, tol, budget),
        "embed(distance-compat)",
    ));

    if q.grid().len() <= MAX_MEMBERSHIP_NODES {
        let mut membership = AxiomReport::new("class(members)");
        for f in members.iter().take(MEMBERSHIP_AUDIT_MEMBERS) {
            merge_checks(&mut membership, check_class_membership(f, &inst.dt, &inst.dx, &w, &0.0));
        }
        audits.push(membership);
    }

    // The projector is the identity here, so the projected path must
    // reproduce the direct sharpness report field for field.
    let mut consistency = LawScan::new("projected-path-matches");
    for t in &sweep {
        let direct = verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol);
        let extremal = extremal_function(&q, &dt_w, t);
        let projected =
            corollary_bound_with_projector(&q, &dt_w, &inst.dx, &extremal, &inst.gauge, t, tol);
        let ok = matches!((&direct, &projected), (Ok(a), Ok(b)) if a == b);
        consistency.case(ok, || Witness {
            tuple: witness_tuple!(t = t),
            observed: "projected path disagrees with the direct sharpness report".into(),
        });
    }
    let mut projector_report = AxiomReport::new("projector(identity-consistency)");
    projector_report.checks.push(consistency.finish());
    audits.push(projector_report);

    audits.push(named(
        check_domination(&q, &dt_w, &inst.dy, &members, &sweep, &inst.gauge, tol),
        "domination(members)",
    ));

    let mut projected_dom = LawScan::new("projected-domination");
    for t in &sweep {
        for (i, f) in members.iter().enumerate() {
            let ok =
                corollary_bound_with_projector(&q, &dt_w, &inst.dx, f, &inst.gauge, t, tol).is_ok();
            projected_dom.case(ok, || Witness {
                tuple: witness_tuple!(member = i, t = t),
                observed: "projected bound not dominated or projector hypotheses broken".into(),
            });
        }
    }
    let mut projected_report = AxiomReport::new("projector(member-domination)");
    projected_report.checks.push(projected_dom.finish());
    audits.push(projected_report);

    let rows = sweep
        .iter()
        .map(|t| row_from(*t, verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol), render_real))
        .collect();

    Ok(RunReport {
        config: config.clone(),
        rows,
        audits,
        counterexamples: run_counterexamples(config.seed),
    })
}

fn run_vector(config: &RunConfig) -> Result<RunReport, HarnessError> {
    let grid = default_grid(config.grid_nodes, &config.sweep).map_err(InstanceError::Grid)?;
    let inst = build_vector_instance(grid, VECTOR_DIMENSION, &VECTOR_DIRECTION)?;
    let q = inst.quadruple.clone();
    let sweep = sorted_sweep(config);
    let tol = config.tolerance;
    let budget = DEFAULT_TUPLE_BUDGET;

    let w = scalar_omega(config.omega);
    let dt_w = match config.omega {
        OmegaKind::Id => inst.dt.clone(),
        _ => transform_distance(&inst.dt, &w),
    };

    let scale = omega_scale(config.omega);
    let members: Vec<SampledFunction<f64, Vec<f64>>> = (0..config.trials)
        .map(|i| {
            let base = lipschitz_vector(
                stream_seed(config.seed, &format!("member-{i}")),
                q.shared_grid(),
                VECTOR_DIMENSION,
            );
            if scale == 1.0 {
                base
            } else {
                compose(&base, move |v: &Vec<f64>| v.iter().map(|c| scale * c).collect())
            }
        })
        .collect();

    let m_sample = Sample::dyadic_nonneg(stream_seed(config.seed, "monoid-sample"), SCALAR_SAMPLE);
    let t_sample = domain_sample(config.seed);
    let x_sample = Sample::dyadic_real_vecs(
        stream_seed(config.seed, "value-sample"),
        VECTOR_SAMPLE,
        VECTOR_DIMENSION,
    );

    let mut audits = Vec::new();
    audits.push(named(check_poset_axioms(&inst.monoid, &m_sample, budget), "poset(bound-monoid)"));
    audits
        .push(named(check_monoid_axioms(&inst.monoid, &m_sample, budget), "monoid(bound-monoid)"));
    audits.push(named(check_distance_axioms(&inst.dt, &t_sample, budget), "distance(domain)"));
    audits.push(named(check_agreement(&inst.dt, &inst.hm, &t_sample, budget), "agreement(domain)"));
    audits.push(named(check_distance_axioms(&inst.dx, &x_sample, budget), "distance(values)"));
    audits.push(named(check_agreement(&inst.dx, &inst.hm, &x_sample, budget), "agreement(values)"));
    audits.push(named(check_distance_axioms(&inst.hm, &m_sample, budget), "distance(ambient)"));
    audits.push(named(check_agreement(&inst.hm, &inst.hm, &m_sample, budget), "agreement(ambient)"));
    audits.push(named(check_metric_axioms(&inst.hm, &m_sample, budget), "metric(ambient)"));
    audits.push(named(check_modulus_axioms(&w, &m_sample, budget), "modulus(omega)"));

    audits.push(named(
        check_monotone(
            &q,
            &scalar_monotone_pairs(&q.shared_grid(), config.seed, config.trials),
            &inst.monoid,
        ),
        "majorant(monotone)",
    ));

    let mut agreement = AxiomReport::new("operator(member-agreement)");
    for t in &sweep {
        for f in &members {
            merge_checks(
                &mut agreement,
                check_operator_agreement(&q, f, &inst.dx, &inst.dy, &inst.gauge, t, tol),
            );
        }
    }
    audits.push(agreement);

    let mut diagram = AxiomReport::new("diagram(embedding)");
    let probes: Vec<SampledFunction<f64, f64>> = (0..config.trials)
        .map(|i| {
            let f = lipschitz_scalar(stream_seed(config.seed, &format!("probe-{i}")), q.shared_grid());
            compose(&f, |v: &f64| v.abs())
        })
        .collect();
    for t in &sweep {
        for g in &probes {
            merge_checks(&mut diagram, check_diagram(&q, g, &dt_w, &inst.dy, &inst.gauge, t, tol));
        }
    }
    audits.push(diagram);

    audits.push(named(
        check_embed_membership(&q, &inst.hm, &inst.dy, &m_sample, &inst.gauge, tol, budget),
        "embed(distance-compat)",
    ));

    if q.grid().len() <= MAX_MEMBERSHIP_NODES {
        let mut membership = AxiomReport::new("class(members)");
        for f in members.iter().take(MEMBERSHIP_AUDIT_MEMBERS) {
            merge_checks(&mut membership, check_class_membership(f, &inst.dt, &inst.dx, &w, &0.0));
        }
        audits.push(membership);
    }

    audits.push(named(
        check_domination(&q, &dt_w, &inst.dy, &members, &sweep, &inst.gauge, tol),
        "domination(members)",
    ));

    let rows = sweep
        .iter()
        .map(|t| row_from(*t, verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol), render_real))
        .collect();

    Ok(RunReport {
        config: config.clone(),
        rows,
        audits,
        counterexamples: run_counterexamples(config.seed),
    })
}

fn run_pair(config: &RunConfig) -> Result<RunReport, HarnessError> {
    let grid = default_grid(config.grid_nodes, &config.sweep).map_err(InstanceError::Grid)?;
    let inst = build_pair_instance(grid);
    let q = inst.quadruple.clone();
    let sweep = sorted_sweep(config);
    let tol = config.tolerance;
    let budget = DEFAULT_TUPLE_BUDGET;

    let w = pair_omega(config.omega);
    let dt_w = match config.omega {
        OmegaKind::Id => inst.dt.clone(),
        _ => transform_distance(&inst.dt, &w),
    };

    let scale = omega_scale(config.omega);
    let members: Vec<SampledFunction<f64, Vec<f64>>> = (0..config.trials)
        .map(|i| {
            let base =
                lipschitz_pair(stream_seed(config.seed, &format!("member-{i}")), q.shared_grid());
            if scale == 1.0 {
                base
            } else {
                compose(&base, move |v: &Vec<f64>| v.iter().map(|c| scale * c).collect())
            }
        })
        .collect();

    let m_sample =
        Sample::dyadic_nonneg_vecs(stream_seed(config.seed, "monoid-sample"), VECTOR_SAMPLE, 2);
    let t_sample = domain_sample(config.seed);
    let x_sample =
        Sample::dyadic_real_vecs(stream_seed(config.seed, "value-sample"), VECTOR_SAMPLE, 2);

    let mut audits = Vec::new();
    audits.push(named(check_poset_axioms(&inst.monoid, &m_sample, budget), "poset(bound-monoid)"));
    audits
        .push(named(check_monoid_axioms(&inst.monoid, &m_sample, budget), "monoid(bound-monoid)"));
    audits.push(named(check_distance_axioms(&inst.dt, &t_sample, budget), "distance(domain)"));
    audits.push(named(check_agreement(&inst.dt, &inst.hm, &t_sample, budget), "agreement(domain)"));
    audits.push(named(check_distance_axioms(&inst.dx, &x_sample, budget), "distance(values)"));
    audits.push(named(check_agreement(&inst.dx, &inst.hm, &x_sample, budget), "agreement(values)"));
    audits.push(named(check_distance_axioms(&inst.hm, &m_sample, budget), "distance(ambient)"));
    audits.push(named(check_agreement(&inst.hm, &inst.hm, &m_sample, budget), "agreement(ambient)"));
    audits.push(named(check_metric_axioms(&inst.hm, &m_sample, budget), "metric(ambient)"));
    audits.push(named(check_modulus_axioms(&w, &m_sample, budget), "modulus(omega)"));

    let monotone_pairs: Vec<(SampledFunction<f64, Vec<f64>>, SampledFunction<f64, Vec<f64>>)> = (0
        ..config.trials)
        .map(|i| {
            let f = lipschitz_pair(stream_seed(config.seed, &format!("monotone-lo-{i}")), q.shared_grid());
            let g = lipschitz_pair(stream_seed(config.seed, &format!("monotone-hi-{i}")), q.shared_grid());
            let u = compose(&f, |v: &Vec<f64>| v.iter().map(|c| c.abs()).collect());
            let u_inner = u.clone();
            let v = SampledFunction::new(q.shared_grid(), move |t: &f64| {
                let base: Vec<f64> = u_inner.eval(t);
                let extra = g.eval(t);
                base.iter().zip(&extra).map(|(a, b)| a + b.abs()).collect::<Vec<f64>>()
            });
            (u, v)
        })
        .collect();
    audits.push(named(check_monotone(&q, &monotone_pairs, &inst.monoid), "majorant(monotone)"));

    let mut agreement = AxiomReport::new("operator(member-agreement)");
    for t in &sweep {
        for f in &members {
            merge_checks(
                &mut agreement,
                check_operator_agreement(&q, f, &inst.dx, &inst.dy, &inst.gauge, t, tol),
            );
        }
    }
    audits.push(agreement);

    let mut diagram = AxiomReport::new("diagram(embedding)");
    let probes: Vec<SampledFunction<f64, Vec<f64>>> =
        members.iter().map(|f| compose(f, |v: &Vec<f64>| v.iter().map(|c| c.abs()).collect())).collect();
    for t in &sweep {
        for g in &probes {
            merge_checks(&mut diagram, check_diagram(&q, g, &dt_w, &inst.dy, &inst.gauge, t, tol));
        }
    }
    audits.push(diagram);

    audits.push(named(
        check_embed_membership(&q, &inst.hm, &inst.dy, &m_sample, &inst.gauge, tol, budget),
        "embed(distance-compat)",
    ));

    if q.grid().len() <= MAX_MEMBERSHIP_NODES {
        let mut membership = AxiomReport::new("class(members)");
        for f in members.iter().take(MEMBERSHIP_AUDIT_MEMBERS) {
            merge_checks(
                &mut membership,
                check_class_membership(f, &inst.dt, &inst.dx, &w, &vec![0.0, 0.0]),
            );
        }
        audits.push(membership);
    }

    audits.push(named(
        check_domination(&q, &dt_w, &inst.dy, &members, &sweep, &inst.gauge, tol),
        "domination(members)",
    ));

    let rows = sweep
        .iter()
        .map(|t| row_from(*t, verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol), render_vec))
        .collect();

    Ok(RunReport {
        config: config.clone(),
        rows,
        audits,
        counterexamples: run_counterexamples(config.seed),
    })
}

fn run_setvalued(config: &RunConfig) -> Result<RunReport, HarnessError> {
    let grid = default_grid(config.grid_nodes, &config.sweep).map_err(InstanceError::Grid)?;
    let inst = build_setvalued_instance(grid)?;
    let q = inst.quadruple.clone();
    let sweep = sorted_sweep(config);
    let tol = config.tolerance;
    let budget = DEFAULT_TUPLE_BUDGET;

    let w = scalar_omega(config.omega);
    let dt_w = match config.omega {
        OmegaKind::Id => inst.dt.clone(),
        _ => transform_distance(&inst.dt, &w),
    };

    let scale = omega_scale(config.omega);
    let members: Vec<SampledFunction<f64, FiniteSet>> = (0..config.trials)
        .map(|i| {
            let base =
                lipschitz_sets(stream_seed(config.seed, &format!("member-{i}")), q.shared_grid());
            if scale == 1.0 {
                base
            } else {
                compose(&base, move |s: &FiniteSet| {
                    FiniteSet::new(s.points().iter().map(|p| scale * p).collect())
                        .expect("scaling preserves finite non-empty sets")
                })
            }
        })
        .collect();

    let m_sample = Sample::dyadic_nonneg(stream_seed(config.seed, "monoid-sample"), SCALAR_SAMPLE);
    let t_sample = domain_sample(config.seed);
    let x_sample = Sample::generate(stream_seed(config.seed, "value-sample"), SET_SAMPLE, |rng| {
        use rand::Rng;
        let n = rng.gen_range(1..=6);
        FiniteSet::new((0..n).map(|_| dyadic_real(rng)).collect()).expect("finite dyadic points")
    });

    let mut audits = Vec::new();
    audits.push(named(check_poset_axioms(&inst.monoid, &m_sample, budget), "poset(bound-monoid)"));
    audits
        .push(named(check_monoid_axioms(&inst.monoid, &m_sample, budget), "monoid(bound-monoid)"));
    audits.push(named(check_distance_axioms(&inst.dt, &t_sample, budget), "distance(domain)"));
    audits.push(named(check_agreement(&inst.dt, &inst.hm, &t_sample, budget), "agreement(domain)"));
    audits.push(named(check_distance_axioms(&inst.dx, &x_sample, budget), "distance(values)"));
    audits.push(named(check_agreement(&inst.dx, &inst.hm, &x_sample, budget), "agreement(values)"));
    audits.push(named(check_distance_axioms(&inst.hm, &m_sample, budget), "distance(ambient)"));
    audits.push(named(check_agreement(&inst.hm, &inst.hm, &m_sample, budget), "agreement(ambient)"));
    audits.push(named(check_metric_axioms(&inst.hm, &m_sample, budget), "metric(ambient)"));
    audits.push(named(check_modulus_axioms(&w, &m_sample, budget), "modulus(omega)"));

    audits.push(named(
        check_monotone(
            &q,
            &scalar_monotone_pairs(&q.shared_grid(), config.seed, config.trials),
            &inst.monoid,
        ),
        "majorant(monotone)",
    ));

    let mut agreement = AxiomReport::new("operator(member-agreement)");
    for t in &sweep {
        for f in &members {
            merge_checks(
                &mut agreement,
                check_operator_agreement(&q, f, &inst.dx, &inst.dy, &inst.gauge, t, tol),
            );
        }
    }
    audits.push(agreement);

    let mut diagram = AxiomReport::new("diagram(embedding)");
    let probes: Vec<SampledFunction<f64, f64>> = (0..config.trials)
        .map(|i| {
            let f = lipschitz_scalar(stream_seed(config.seed, &format!("probe-{i}")), q.shared_grid());
            compose(&f, |v: &f64| v.abs())
        })
        .collect();
    for t in &sweep {
        for g in &probes {
            merge_checks(&mut diagram, check_diagram(&q, g, &dt_w, &inst.dy, &inst.gauge, t, tol));
        }
    }
    audits.push(diagram);

    audits.push(named(
        check_embed_membership(&q, &inst.hm, &inst.dy, &m_sample, &inst.gauge, tol, budget),
        "embed(distance-compat)",
    ));

    if q.grid().len() <= MAX_MEMBERSHIP_NODES {
        let mut membership = AxiomReport::new("class(members)");
        for f in members.iter().take(MEMBERSHIP_AUDIT_MEMBERS) {
            merge_checks(&mut membership, check_class_membership(f, &inst.dt, &inst.dx, &w, &0.0));
        }
        audits.push(membership);
    }

    // Hull-projector path: conditions are audited inside the projected
    // bound; the projected sharpness must agree with the direct one at
    // the run tolerance (the deviations differ only by quadrature dust).
    let mut consistency = LawScan::new("projected-path-agrees");
    for t in &sweep {
        let direct = verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol);
        let extremal = extremal_function(&q, &dt_w, t);
        let projected =
            corollary_bound_with_projector(&q, &dt_w, &inst.dx, &extremal, &inst.gauge, t, tol);
        let ok = match (&direct, &projected) {
            (Ok(a), Ok(b)) => {
                a.bound == b.bound && inst.gauge.gap(&a.deviation, &b.deviation) <= tol
            }
            _ => false,
        };
        consistency.case(ok, || Witness {
            tuple: witness_tuple!(t = t),
            observed: "projected path disagrees with the direct sharpness report".into(),
        });
    }
    let mut projector_report = AxiomReport::new("projector(hull-consistency)");
    projector_report.checks.push(consistency.finish());
    audits.push(projector_report);

    audits.push(named(
        check_domination(&q, &dt_w, &inst.dy, &members, &sweep, &inst.gauge, tol),
        "domination(members)",
    ));

    let mut projected_dom = LawScan::new("projected-domination");
    for t in &sweep {
        for (i, f) in members.iter().enumerate() {
            let ok =
                corollary_bound_with_projector(&q, &dt_w, &inst.dx, f, &inst.gauge, t, tol).is_ok();
            projected_dom.case(ok, || Witness {
                tuple: witness_tuple!(member = i, t = t),
                observed: "projected bound not dominated or projector hypotheses broken".into(),
            });
        }
    }
    let mut projected_report = AxiomReport::new("projector(member-domination)");
    projected_report.checks.push(projected_dom.finish());
    audits.push(projected_report);

    let rows = sweep
        .iter()
        .map(|t| row_from(*t, verify_sharpness(&q, &dt_w, &inst.dy, &inst.gauge, t, tol), render_real))
        .collect();

    Ok(RunReport {
        config: config.clone(),
        rows,
        audits,
        counterexamples: run_counterexamples(config.seed),
    })
}
