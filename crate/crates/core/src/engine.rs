//! The operator bundle and the sharp bound it satisfies.
//!
//! A bundle wires together an operator `Λ` on X-valued functions, a
//! monotone majorant `λ` on M-valued functions, pointwise maps
//! `φ_X : M → X` and `φ_Y : M → Y`, and optionally a projector
//! `P : X → X`. When the audits in this module hold — λ monotone and
//! vanishing on the θ-constant, the square `Λ ∘ φ_X = φ_Y ∘ λ`
//! commuting, `φ_Y` distance-compatible at the bound value — the
//! deviation of any class member f from its value at t obeys
//!
//! ```text
//! h_Y(Λf, Λ(const f(t)))  ≤  λ(h_T(·, t))
//! ```
//!
//! and the bound is attained by the lifted distance profile
//! `f_t = φ_X(h_T(·, t))`. [`verify_sharpness`] computes both sides at
//! the extremal and reports the gap; [`corollary_bound_with_projector`]
//! does the same for the projected variant `h_X(Λf, P f(t))`, and
//! [`homega_bound`] for a class weighted by a modulus of continuity.
//!
//! Everything here is tolerance-based: quadrature is involved, so
//! comparisons allow a caller-declared additive tolerance, unlike the
//! exact order comparisons of the axiom suites.

use std::fmt;
use std::sync::Arc;

use crate::distance::DistanceSpace;
use crate::lipschitz::{compose, transform_distance, ModulusOfContinuity, SampledFunction};
use crate::order::OrderedMonoid;
use crate::report::{witness_tuple, AxiomReport, LawScan, Witness};
use crate::sample::{for_each_pair, Sample};

/// The operator bundle `(Λ, λ, φ_X, φ_Y, P?)` over a shared grid.
pub struct OperatorQuadruple<T, X, Y, M> {
    operator: Arc<dyn Fn(&SampledFunction<T, X>) -> Y + Send + Sync>,
    majorant: Arc<dyn Fn(&SampledFunction<T, M>) -> M + Send + Sync>,
    lift: Arc<dyn Fn(&M) -> X + Send + Sync>,
    embed: Arc<dyn Fn(&M) -> Y + Send + Sync>,
    projector: Option<Arc<dyn Fn(&X) -> X + Send + Sync>>,
    grid: Arc<Vec<T>>,
}

impl<T, X, Y, M> Clone for OperatorQuadruple<T, X, Y, M> {
    fn clone(&self) -> Self {
        OperatorQuadruple {
            operator: Arc::clone(&self.operator),
            majorant: Arc::clone(&self.majorant),
            lift: Arc::clone(&self.lift),
            embed: Arc::clone(&self.embed),
            projector: self.projector.as_ref().map(Arc::clone),
            grid: Arc::clone(&self.grid),
        }
    }
}

impl<T, X, Y, M> OperatorQuadruple<T, X, Y, M> {
    pub fn new(
        grid: Arc<Vec<T>>,
        operator: impl Fn(&SampledFunction<T, X>) -> Y + Send + Sync + 'static,
        majorant: impl Fn(&SampledFunction<T, M>) -> M + Send + Sync + 'static,
        lift: impl Fn(&M) -> X + Send + Sync + 'static,
        embed: impl Fn(&M) -> Y + Send + Sync + 'static,
    ) -> Self {
        OperatorQuadruple {
            operator: Arc::new(operator),
            majorant: Arc::new(majorant),
            lift: Arc::new(lift),
            embed: Arc::new(embed),
            projector: None,
            grid,
        }
    }

    /// Attach the projector used by the convexified bound.
    pub fn with_projector(mut self, p: impl Fn(&X) -> X + Send + Sync + 'static) -> Self {
        self.projector = Some(Arc::new(p));
        self
    }

    pub fn apply(&self, f: &SampledFunction<T, X>) -> Y {
        (self.operator)(f)
    }

    pub fn majorize(&self, g: &SampledFunction<T, M>) -> M {
        (self.majorant)(g)
    }

    pub fn lift_point(&self, m: &M) -> X {
        (self.lift)(m)
    }

    pub fn embed_point(&self, m: &M) -> Y {
        (self.embed)(m)
    }

    pub fn has_projector(&self) -> bool {
        self.projector.is_some()
    }

    /// Apply the projector to one point, if a projector is attached.
    pub fn project_point(&self, x: &X) -> Option<X> {
        self.projector.as_ref().map(|p| p(x))
    }

    pub fn grid(&self) -> &[T] {
        &self.grid
    }

    pub fn shared_grid(&self) -> Arc<Vec<T>> {
        Arc::clone(&self.grid)
    }
}

impl<T: Send + Sync + 'static, X, Y, M: Send + Sync + 'static> OperatorQuadruple<T, X, Y, M> {
    /// Lift an M-valued function pointwise through `φ_X`.
    pub fn lift_function(&self, g: &SampledFunction<T, M>) -> SampledFunction<T, X>
    where
        X: 'static,
    {
        let lift = Arc::clone(&self.lift);
        compose(g, move |m| lift(m))
    }
}

impl<T, X: Clone + Send + Sync + 'static, Y, M> OperatorQuadruple<T, X, Y, M> {
    /// `Λ` on the constant function `τ ↦ f(t)`, materialized literally on
    /// the grid rather than assumed to pass through unchanged.
    pub fn apply_at(&self, f: &SampledFunction<T, X>, t: &T) -> Y {
        let constant = SampledFunction::constant(self.shared_grid(), f.eval(t));
        self.apply(&constant)
    }
}

/// Renders M-elements comparable against real tolerances: an ambient
/// distance on M, a real-valued magnitude, and an embedding of reals
/// back into M (so a tolerance can be added on the M side of an order
/// comparison).
pub struct MetricGauge<M> {
    ambient: DistanceSpace<M, M>,
    size: Arc<dyn Fn(&M) -> f64 + Send + Sync>,
    from_real: Arc<dyn Fn(f64) -> M + Send + Sync>,
}

impl<M: Clone> Clone for MetricGauge<M> {
    fn clone(&self) -> Self {
        MetricGauge {
            ambient: self.ambient.clone(),
            size: Arc::clone(&self.size),
            from_real: Arc::clone(&self.from_real),
        }
    }
}

impl<M: Clone> MetricGauge<M> {
    pub fn new(
        ambient: DistanceSpace<M, M>,
        size: impl Fn(&M) -> f64 + Send + Sync + 'static,
        from_real: impl Fn(f64) -> M + Send + Sync + 'static,
    ) -> Self {
        MetricGauge { ambient, size: Arc::new(size), from_real: Arc::new(from_real) }
    }

    /// Real magnitude of the ambient distance between two elements.
    pub fn gap(&self, a: &M, b: &M) -> f64 {
        (self.size)(&self.ambient.eval(a, b))
    }

    pub fn size(&self, m: &M) -> f64 {
        (self.size)(m)
    }

    /// The tolerance as an M-element, for the order-comparison side.
    pub fn tolerance_element(&self, tol: f64) -> M {
        (self.from_real)(tol)
    }

    pub fn ambient(&self) -> &DistanceSpace<M, M> {
        &self.ambient
    }
}

/// Gauge for M = non-negative reals.
pub fn scalar_gauge() -> MetricGauge<f64> {
    MetricGauge::new(
        crate::distance::fixtures::absdiff_line(crate::distance::Tier::PseudoMetric),
        |m: &f64| m.abs(),
        |t: f64| t,
    )
}

/// Gauge for M = non-negative vectors: magnitude is the largest
/// component, tolerances embed as constant vectors.
pub fn vector_gauge(dim: usize) -> MetricGauge<Vec<f64>> {
    MetricGauge::new(
        crate::distance::fixtures::absdiff_componentwise(dim),
        |m: &Vec<f64>| m.iter().fold(0.0f64, |acc, c| acc.max(c.abs())),
        move |t: f64| vec![t; dim],
    )
}

/// One evaluation of the bound machinery at a point t.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T, M> {
    pub t: T,
    pub bound: M,
    pub deviation: M,
    /// Real magnitude of the ambient distance between bound and the
    /// extremal deviation.
    pub gap: f64,
    pub tolerance: f64,
    /// deviation ≤ bound + tolerance in the carrier order.
    pub dominated: bool,
    /// gap ≤ tolerance.
    pub sharp: bool,
}

impl<T, M> BoundReport<T, M> {
    pub fn verdict(&self) -> bool {
        self.dominated && self.sharp
    }
}

impl<T: fmt::Debug, M: fmt::Debug> fmt::Display for BoundReport<T, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t = {:?}: bound {:?}, deviation {:?}, gap {} (tolerance {}), dominated = {}, sharp = {}",
            self.t, self.bound, self.deviation, self.gap, self.tolerance, self.dominated, self.sharp
        )
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError<T: fmt::Debug, M: fmt::Debug> {
    /// The extremal function failed to attain the bound within tolerance.
    #[error("sharpness failed: {0}")]
    SharpnessFailure(BoundReport<T, M>),
    /// A projector hypothesis does not hold on this instance.
    #[error("projector hypothesis failed: {0}")]
    PConditionViolation(String),
}

/// The distance-to-t profile `τ ↦ dT(τ, t)` on the bundle's grid.
fn point_section<T, M>(
    dt: &DistanceSpace<T, M>,
    grid: Arc<Vec<T>>,
    t: &T,
) -> SampledFunction<T, M>
where
    T: Clone + Send + Sync + 'static,
    M: Clone + Send + Sync + 'static,
{
    let dt = dt.clone();
    let center = t.clone();
    SampledFunction::new(grid, move |tau| dt.eval(tau, &center))
}

/// The sharp bound `λ(dT(·, t))`.
pub fn ostrowski_bound<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    dt: &DistanceSpace<T, M>,
    t: &T,
) -> M
where
    T: Clone + Send + Sync + 'static,
    M: Clone + Send + Sync + 'static,
{
    q.majorize(&point_section(dt, q.shared_grid(), t))
}

/// `h_Y(Λf, Λ(const f(t)))`: how far the operator's output sits from the
/// operator applied to the function frozen at t.
pub fn deviation<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    f: &SampledFunction<T, X>,
    dy: &DistanceSpace<Y, M>,
    t: &T,
) -> M
where
    X: Clone + Send + Sync + 'static,
    M: Clone,
{
    dy.eval(&q.apply(f), &q.apply_at(f, t))
}

/// The extremal function `f_t = φ_X(dT(·, t))`, which attains the bound.
pub fn extremal_function<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    dt: &DistanceSpace<T, M>,
    t: &T,
) -> SampledFunction<T, X>
where
    T: Clone + Send + Sync + 'static,
    X: 'static,
    M: Clone + Send + Sync + 'static,
{
    q.lift_function(&point_section(dt, q.shared_grid(), t))
}

/// Monotonicity of the majorant on pointwise-dominated pairs. Pairs that
/// are not dominated on the grid are skipped, not counted.
pub fn check_monotone<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    pairs: &[(SampledFunction<T, M>, SampledFunction<T, M>)],
    mon: &OrderedMonoid<M>,
) -> AxiomReport
where
    M: Clone + fmt::Debug,
{
    let mut scan = LawScan::new("majorant-monotone");
    for (i, (u, v)) in pairs.iter().enumerate() {
        let dominated = q.grid().iter().all(|t| mon.leq(&u.eval(t), &v.eval(t)));
        if !dominated {
            continue;
        }
        let lu = q.majorize(u);
        let lv = q.majorize(v);
        let ok = mon.leq(&lu, &lv);
        scan.case(ok, || Witness {
            tuple: witness_tuple!(pair = i),
            observed: format!("λ(u) = {lu:?} not ≤ λ(v) = {lv:?} for a dominated pair"),
        });
    }
    let mut report = AxiomReport::new("monotone");
    report.checks.push(scan.finish());
    report
}

/// The agreement between operator and majorant on one class member:
/// `h_Y(Λf, Λ(const f(t))) ≤ λ(dX(f(·), f(t))) + tolerance`.
pub fn check_operator_agreement<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    f: &SampledFunction<T, X>,
    dx: &DistanceSpace<X, M>,
    dy: &DistanceSpace<Y, M>,
    gauge: &MetricGauge<M>,
    t: &T,
    tol: f64,
) -> AxiomReport
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: Clone + Send + Sync + 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let mon = dy.monoid();
    let lhs = deviation(q, f, dy, t);
    let f_inner = f.clone();
    let dx_inner = dx.clone();
    let center = f.eval(t);
    let section =
        SampledFunction::new(q.shared_grid(), move |tau| dx_inner.eval(&f_inner.eval(tau), &center));
    let rhs = q.majorize(&section);
    let ok = mon.leq(&lhs, &mon.plus(&rhs, &gauge.tolerance_element(tol)));
    let mut scan = LawScan::new("operator-agreement");
    scan.case(ok, || Witness {
        tuple: witness_tuple!(t = t),
        observed: format!("deviation {lhs:?} not ≤ majorant {rhs:?} plus tolerance {tol}"),
    });
    let mut report = AxiomReport::new("operator");
    report.checks.push(scan.finish());
    report
}

/// The commuting square and the embedding laws, at one probe input g and
/// one point t: `Λ(φ_X g) = φ_Y(λ g)` within tolerance, `λ(const θ) = θ`
/// exactly, and `h_Y(φ_Y(m), φ_Y(θ)) = m` at the bound value
/// `m = λ(dT(·, t))` within tolerance.
pub fn check_diagram<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    g: &SampledFunction<T, M>,
    dt: &DistanceSpace<T, M>,
    dy: &DistanceSpace<Y, M>,
    gauge: &MetricGauge<M>,
    t: &T,
    tol: f64,
) -> AxiomReport
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let mon = dy.monoid();
    let mut report = AxiomReport::new("diagram");

    let mut at_theta = LawScan::new("majorant-at-theta");
    let theta_const = SampledFunction::constant(q.shared_grid(), mon.theta().clone());
    let lam_theta = q.majorize(&theta_const);
    at_theta.case(mon.eq(&lam_theta, mon.theta()), || Witness {
        tuple: witness_tuple!(input = "constant θ"),
        observed: format!("λ(θ-constant) = {lam_theta:?}, expected θ = {:?}", mon.theta()),
    });
    report.checks.push(at_theta.finish());

    let mut commutes = LawScan::new("diagram-commutes");
    let through_x = q.apply(&q.lift_function(g));
    let through_m = q.embed_point(&q.majorize(g));
    let residual = gauge.size(&dy.eval(&through_x, &through_m));
    commutes.case(residual <= tol, || Witness {
        tuple: witness_tuple!(t = t),
        observed: format!("Y-distance between the two compositions is {residual}, tolerance {tol}"),
    });
    report.checks.push(commutes.finish());

    let mut isometry = LawScan::new("embed-isometry-at-bound");
    let m_star = ostrowski_bound(q, dt, t);
    let lhs = dy.eval(&q.embed_point(&m_star), &q.embed_point(mon.theta()));
    let residual = gauge.gap(&lhs, &m_star);
    isometry.case(residual <= tol, || Witness {
        tuple: witness_tuple!(t = t, m = m_star),
        observed: format!("h_Y(φ_Y(m), φ_Y(θ)) = {lhs:?} differs from m by {residual}, tolerance {tol}"),
    });
    report.checks.push(isometry.finish());

    report
}

/// Distance-compatibility of the embedding `φ_Y` over a sample of monoid
/// elements: `h_Y(φ_Y m1, φ_Y m2) ≤ h_M(m1, m2) + tolerance`.
pub fn check_embed_membership<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    hm: &DistanceSpace<M, M>,
    dy: &DistanceSpace<Y, M>,
    sample: &Sample<M>,
    gauge: &MetricGauge<M>,
    tol: f64,
    budget: usize,
) -> AxiomReport
where
    M: Clone + fmt::Debug,
{
    let mon = dy.monoid();
    let slack = gauge.tolerance_element(tol);
    let mut scan = LawScan::new("embed-membership");
    for_each_pair(sample, budget, |m1, m2| {
        let lhs = dy.eval(&q.embed_point(m1), &q.embed_point(m2));
        let rhs = mon.plus(&hm.eval(m1, m2), &slack);
        let ok = mon.leq(&lhs, &rhs);
        scan.case(ok, || Witness {
            tuple: witness_tuple!(m1 = m1, m2 = m2),
            observed: format!("embedded gap {lhs:?} not ≤ allowed {rhs:?}"),
        });
    });
    let mut report = AxiomReport::new("embed");
    report.checks.push(scan.finish());
    report
}

/// Bound domination over explicit members and points: every deviation
/// must sit below the bound plus tolerance.
pub fn check_domination<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    dt: &DistanceSpace<T, M>,
    dy: &DistanceSpace<Y, M>,
    members: &[SampledFunction<T, X>],
    ts: &[T],
    gauge: &MetricGauge<M>,
    tol: f64,
) -> AxiomReport
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: Clone + Send + Sync + 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let mon = dy.monoid();
    let slack = gauge.tolerance_element(tol);
    let mut scan = LawScan::new("bound-domination");
    for t in ts {
        let allowed = mon.plus(&ostrowski_bound(q, dt, t), &slack);
        for (i, f) in members.iter().enumerate() {
            let dev = deviation(q, f, dy, t);
            let ok = mon.leq(&dev, &allowed);
            scan.case(ok, || Witness {
                tuple: witness_tuple!(member = i, t = t),
                observed: format!("deviation {dev:?} not ≤ bound-plus-tolerance {allowed:?}"),
            });
        }
    }
    let mut report = AxiomReport::new("domination");
    report.checks.push(scan.finish());
    report
}

/// Evaluate bound and extremal deviation at t and report whether the
/// bound dominates and is attained within tolerance. The gap exceeding
/// tolerance signals broken wiring and comes back as an error carrying
/// the full report.
pub fn verify_sharpness<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    dt: &DistanceSpace<T, M>,
    dy: &DistanceSpace<Y, M>,
    gauge: &MetricGauge<M>,
    t: &T,
    tol: f64,
) -> Result<BoundReport<T, M>, EngineError<T, M>>
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: Clone + Send + Sync + 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let mon = dy.monoid();
    let bound = ostrowski_bound(q, dt, t);
    let extremal = extremal_function(q, dt, t);
    let dev = deviation(q, &extremal, dy, t);
    let dominated = mon.leq(&dev, &mon.plus(&bound, &gauge.tolerance_element(tol)));
    let gap = gauge.gap(&bound, &dev);
    let report = BoundReport {
        t: t.clone(),
        bound,
        deviation: dev,
        gap,
        tolerance: tol,
        dominated,
        sharp: gap <= tol,
    };
    if report.verdict() {
        Ok(report)
    } else {
        Err(EngineError::SharpnessFailure(report))
    }
}

/// The projected variant, for bundles whose operator lands back in X:
/// audits the projector hypotheses on the given member
/// (`Λf = Λ(P∘f) = P(Λf)` within tolerance, and
/// `h_X(P φ_X(m), P φ_X(θ)) = m` at the bound value), then reports
/// `h_X(Λf, P f(t)) ≤ λ(dT(·, t))` with the projected extremal
/// `f̃_t = P ∘ φ_X(dT(·, t))` attaining it.
pub fn corollary_bound_with_projector<T, X, M>(
    q: &OperatorQuadruple<T, X, X, M>,
    dt: &DistanceSpace<T, M>,
    dx: &DistanceSpace<X, M>,
    f: &SampledFunction<T, X>,
    gauge: &MetricGauge<M>,
    t: &T,
    tol: f64,
) -> Result<BoundReport<T, M>, EngineError<T, M>>
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: Clone + Send + Sync + 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let Some(p) = q.projector.as_ref().map(Arc::clone) else {
        return Err(EngineError::PConditionViolation("no projector attached to this bundle".into()));
    };
    let mon = dx.monoid();

    let lam_f = q.apply(f);
    let projected_f = {
        let p = Arc::clone(&p);
        compose(f, move |x| p(x))
    };
    let lam_pf = q.apply(&projected_f);
    let p_lam_f = p(&lam_f);
    let gap_right = gauge.size(&dx.eval(&lam_f, &lam_pf));
    let gap_left = gauge.size(&dx.eval(&lam_f, &p_lam_f));
    if gap_right > tol || gap_left > tol {
        return Err(EngineError::PConditionViolation(format!(
            "Λ(P∘f) deviates from Λf by {gap_right} and P(Λf) by {gap_left}, tolerance {tol}"
        )));
    }

    let bound = ostrowski_bound(q, dt, t);
    let lifted_bound = p(&q.lift_point(&bound));
    let lifted_theta = p(&q.lift_point(mon.theta()));
    let iso_residual = gauge.gap(&dx.eval(&lifted_bound, &lifted_theta), &bound);
    if iso_residual > tol {
        return Err(EngineError::PConditionViolation(format!(
            "h_X(P φ_X(m), P φ_X(θ)) differs from the bound value by {iso_residual}, tolerance {tol}"
        )));
    }

    let dev = dx.eval(&lam_f, &p(&f.eval(t)));
    let dominated = mon.leq(&dev, &mon.plus(&bound, &gauge.tolerance_element(tol)));

    let extremal = {
        let p = Arc::clone(&p);
        let lifted = extremal_function(q, dt, t);
        compose(&lifted, move |x| p(x))
    };
    let dev_ext = dx.eval(&q.apply(&extremal), &p(&extremal.eval(t)));
    let gap = gauge.gap(&bound, &dev_ext);

    let report = BoundReport {
        t: t.clone(),
        bound,
        deviation: dev,
        gap,
        tolerance: tol,
        dominated,
        sharp: gap <= tol,
    };
    if report.verdict() {
        Ok(report)
    } else {
        Err(EngineError::SharpnessFailure(report))
    }
}

/// Sharpness for the ω-weighted class: identical machinery, run against
/// the transformed distance `ω ∘ dT`, giving bound `λ(ω(dT(·, t)))` and
/// extremal `φ_X(ω(dT(·, t)))`.
pub fn homega_bound<T, X, Y, M>(
    q: &OperatorQuadruple<T, X, Y, M>,
    dt: &DistanceSpace<T, M>,
    dy: &DistanceSpace<Y, M>,
    gauge: &MetricGauge<M>,
    w: &ModulusOfContinuity<M>,
    t: &T,
    tol: f64,
) -> Result<BoundReport<T, M>, EngineError<T, M>>
where
    T: Clone + fmt::Debug + Send + Sync + 'static,
    X: Clone + Send + Sync + 'static,
    M: Clone + fmt::Debug + Send + Sync + 'static,
{
    let weighted = transform_distance(dt, w);
    verify_sharpness(q, &weighted, dy, gauge, t, tol)
}
