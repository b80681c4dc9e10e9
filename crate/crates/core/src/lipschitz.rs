//! Function classes controlled by a modulus of continuity, over a finite
//! verification grid.
//!
//! Membership in the class `H^ω(T, X)` — distances between function
//! values bounded by `ω` of the distance between arguments — is checked
//! exhaustively over all pairs of grid nodes. The grid stands in for the
//! domain everywhere: quadrature, audits, and membership all read the
//! same node list, so a function that verifies here is exactly as good
//! as the discretized setting claims.
//!
//! Membership comparisons are exact by default. Functions whose values
//! involve an off-lattice constant (say `|t − 0.3|` on a dyadic grid) can
//! round a real equality into a one-ulp violation; the `slack` argument
//! of [`check_class_membership`] absorbs that, and callers state the
//! slack they used. On-lattice fixtures pass with zero slack.

use std::fmt;
use std::sync::Arc;

use crate::distance::{DistanceSpace, Tier};
use crate::order::OrderedMonoid;
use crate::report::{witness_tuple, AxiomReport, LawScan, Witness};
use crate::sample::{for_each_pair, Sample};

/// Largest grid for which pairwise membership scans stay cheap.
pub const MAX_MEMBERSHIP_NODES: usize = 512;

/// A function `T → X` carried together with the finite grid it is
/// verified and integrated on.
pub struct SampledFunction<T, X> {
    eval: Arc<dyn Fn(&T) -> X + Send + Sync>,
    grid: Arc<Vec<T>>,
}

impl<T, X> Clone for SampledFunction<T, X> {
    fn clone(&self) -> Self {
        SampledFunction { eval: Arc::clone(&self.eval), grid: Arc::clone(&self.grid) }
    }
}

impl<T, X> fmt::Debug for SampledFunction<T, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction").field("grid_nodes", &self.grid.len()).finish_non_exhaustive()
    }
}

impl<T, X> SampledFunction<T, X> {
    pub fn new(grid: Arc<Vec<T>>, eval: impl Fn(&T) -> X + Send + Sync + 'static) -> Self {
        assert!(!grid.is_empty(), "verification grid must be non-empty");
        SampledFunction { eval: Arc::new(eval), grid }
    }

    pub fn eval(&self, t: &T) -> X {
        (self.eval)(t)
    }

    pub fn grid(&self) -> &[T] {
        &self.grid
    }

    pub fn shared_grid(&self) -> Arc<Vec<T>> {
        Arc::clone(&self.grid)
    }

    /// Values at every grid node, in grid order.
    pub fn values(&self) -> Vec<X> {
        self.grid.iter().map(|t| self.eval(t)).collect()
    }
}

impl<T, X: Clone + Send + Sync + 'static> SampledFunction<T, X> {
    /// The constant function with the given value.
    pub fn constant(grid: Arc<Vec<T>>, value: X) -> Self {
        SampledFunction::new(grid, move |_| value.clone())
    }
}

/// Post-composition with a pointwise map, on the inner function's grid.
pub fn compose<T, X, Y>(
    f: &SampledFunction<T, X>,
    g: impl Fn(&X) -> Y + Send + Sync + 'static,
) -> SampledFunction<T, Y>
where
    T: Send + Sync + 'static,
    X: Send + Sync + 'static,
{
    let inner = f.clone();
    SampledFunction::new(f.shared_grid(), move |t| g(&inner.eval(t)))
}

/// The declared tier of a distance did not provide the structure an
/// operation needs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("operation needs the agreement law of a pseudo-metric; declared tier is {found}")]
pub struct TierViolation {
    pub found: Tier,
}

/// A modulus of continuity `ω : M → M`, bundled with the carrier monoid
/// and the ambient distance on `M` used by the semi-additivity law.
pub struct ModulusOfContinuity<M> {
    omega: Arc<dyn Fn(&M) -> M + Send + Sync>,
    monoid: OrderedMonoid<M>,
    ambient: DistanceSpace<M, M>,
}

impl<M: Clone> Clone for ModulusOfContinuity<M> {
    fn clone(&self) -> Self {
        ModulusOfContinuity {
            omega: Arc::clone(&self.omega),
            monoid: self.monoid.clone(),
            ambient: self.ambient.clone(),
        }
    }
}

impl<M: Clone> ModulusOfContinuity<M> {
    pub fn new(
        monoid: OrderedMonoid<M>,
        ambient: DistanceSpace<M, M>,
        omega: impl Fn(&M) -> M + Send + Sync + 'static,
    ) -> Self {
        ModulusOfContinuity { omega: Arc::new(omega), monoid, ambient }
    }

    pub fn eval(&self, m: &M) -> M {
        (self.omega)(m)
    }

    pub fn monoid(&self) -> &OrderedMonoid<M> {
        &self.monoid
    }

    pub fn ambient(&self) -> &DistanceSpace<M, M> {
        &self.ambient
    }
}

fn scalar_modulus(omega: impl Fn(&f64) -> f64 + Send + Sync + 'static) -> ModulusOfContinuity<f64> {
    ModulusOfContinuity::new(
        crate::order::nonneg_reals(),
        crate::distance::fixtures::absdiff_line(Tier::PseudoMetric),
        omega,
    )
}

/// ω(m) = m. Transforming a distance by it changes nothing, bit for bit.
pub fn identity_modulus() -> ModulusOfContinuity<f64> {
    scalar_modulus(|m: &f64| *m)
}

/// ω(m) = m^(1/2), the Hölder-1/2 modulus.
pub fn sqrt_modulus() -> ModulusOfContinuity<f64> {
    scalar_modulus(|m: &f64| m.sqrt())
}

/// ω(m) = m^(1/3), the Hölder-1/3 modulus.
pub fn cbrt_modulus() -> ModulusOfContinuity<f64> {
    scalar_modulus(|m: &f64| m.cbrt())
}

/// ω(m) = m^α for 0 < α ≤ 1. The named constructors above route through
/// the correctly rounded `sqrt`/`cbrt` instead of `powf`; use them when α
/// is 1, 1/2 or 1/3.
pub fn power_modulus(alpha: f64) -> ModulusOfContinuity<f64> {
    assert!(alpha > 0.0 && alpha <= 1.0, "power modulus needs 0 < α ≤ 1");
    scalar_modulus(move |m: &f64| m.powf(alpha))
}

/// Componentwise ω(m) = m^α on non-negative vectors.
pub fn vec_power_modulus(alpha: f64, dim: usize) -> ModulusOfContinuity<Vec<f64>> {
    assert!(alpha > 0.0 && alpha <= 1.0, "power modulus needs 0 < α ≤ 1");
    ModulusOfContinuity::new(
        crate::order::nonneg_vectors(dim),
        crate::distance::fixtures::absdiff_componentwise(dim),
        move |m: &Vec<f64>| {
            m.iter()
                .map(|c| match alpha {
                    a if a == 1.0 => *c,
                    a if a == 0.5 => c.sqrt(),
                    _ => c.powf(alpha),
                })
                .collect()
        },
    )
}

/// Moduli that break exactly one law, for the audit suites to catch.
pub mod controls {
    use super::*;

    /// ω(m) = m², superadditive instead of semi-additive: the gap between
    /// ω-values outgrows ω of the gap as soon as both inputs are positive.
    pub fn square_modulus() -> ModulusOfContinuity<f64> {
        scalar_modulus(|m: &f64| m * m)
    }
}

/// Audit the three modulus laws over a sample of monoid elements:
/// ω(θ) = θ, monotonicity, and semi-additivity
/// (`ambient(ω(m1), ω(m2)) ≤ ω(ambient(m1, m2))`).
pub fn check_modulus_axioms<M>(
    w: &ModulusOfContinuity<M>,
    sample: &Sample<M>,
    budget: usize,
) -> AxiomReport
where
    M: Clone + PartialEq + fmt::Debug,
{
    let mon = w.monoid().clone();
    let mut report = AxiomReport::new("modulus");

    let mut vanishes = LawScan::new("vanishes-at-theta");
    let at_theta = w.eval(mon.theta());
    vanishes.case(mon.eq(&at_theta, mon.theta()), || Witness {
        tuple: witness_tuple!(m = mon.theta()),
        observed: format!("ω(θ) = {at_theta:?}"),
    });
    report.checks.push(vanishes.finish());

    let mut monotone = LawScan::new("non-decreasing");
    for_each_pair(sample, budget, |m1, m2| {
        let ok = !mon.leq(m1, m2) || mon.leq(&w.eval(m1), &w.eval(m2));
        monotone.case(ok, || Witness {
            tuple: witness_tuple!(m1 = m1, m2 = m2),
            observed: format!("m1 ≤ m2 but ω(m1) = {:?} not ≤ ω(m2) = {:?}", w.eval(m1), w.eval(m2)),
        });
    });
    report.checks.push(monotone.finish());

    let mut semi = LawScan::new("semi-additive");
    for_each_pair(sample, budget, |m1, m2| {
        let lhs = w.ambient().eval(&w.eval(m1), &w.eval(m2));
        let rhs = w.eval(&w.ambient().eval(m1, m2));
        let ok = mon.leq(&lhs, &rhs);
        semi.case(ok, || Witness {
            tuple: witness_tuple!(m1 = m1, m2 = m2),
            observed: format!("lhs {lhs:?} not ≤ rhs {rhs:?}"),
        });
    });
    report.checks.push(semi.finish());

    report
}

/// Verify `dX(f(t1), f(t2)) ≤ ω(dT(t1, t2)) + slack` over every pair of
/// grid nodes. `slack` is θ for exact checks; pass a tiny positive
/// element when the function's values are off the grid's lattice.
pub fn check_class_membership<T, X, M>(
    f: &SampledFunction<T, X>,
    dt: &DistanceSpace<T, M>,
    dx: &DistanceSpace<X, M>,
    w: &ModulusOfContinuity<M>,
    slack: &M,
) -> AxiomReport
where
    T: Clone + fmt::Debug,
    M: Clone + fmt::Debug,
{
    let nodes = f.grid();
    assert!(
        nodes.len() <= MAX_MEMBERSHIP_NODES,
        "membership scan is quadratic; grid of {} exceeds the cap of {}",
        nodes.len(),
        MAX_MEMBERSHIP_NODES
    );
    let mon = dx.monoid();
    let mut scan = LawScan::new("lipschitz-membership");
    for (i, t1) in nodes.iter().enumerate() {
        let f1 = f.eval(t1);
        for t2 in nodes.iter().skip(i + 1) {
            let lhs = dx.eval(&f1, &f.eval(t2));
            let rhs = mon.plus(&w.eval(&dt.eval(t1, t2)), slack);
            let ok = mon.leq(&lhs, &rhs);
            scan.case(ok, || Witness {
                tuple: witness_tuple!(t1 = t1, t2 = t2),
                observed: format!("value gap {lhs:?} not ≤ allowed {rhs:?}"),
            });
        }
    }
    let mut report = AxiomReport::new("membership");
    report.checks.push(scan.finish());
    report
}

/// The distance-to-a-point profile `τ ↦ dX(f(τ), f(t))`, the shape every
/// extremal function is built from. Needs the agreement law, so the
/// distance must be declared a pseudo-metric; any other tier is refused.
pub fn distance_section<T, X, M>(
    f: &SampledFunction<T, X>,
    dx: &DistanceSpace<X, M>,
    t: &T,
) -> Result<SampledFunction<T, M>, TierViolation>
where
    T: Send + Sync + 'static,
    X: Send + Sync + 'static,
    M: Clone + Send + Sync + 'static,
{
    if dx.tier() != Tier::PseudoMetric {
        return Err(TierViolation { found: dx.tier() });
    }
    let inner = f.clone();
    let dx = dx.clone();
    let center = f.eval(t);
    Ok(SampledFunction::new(f.shared_grid(), move |tau| dx.eval(&inner.eval(tau), &center)))
}

/// The transformed distance `ω ∘ dT`, keeping the original's tier: this
/// is the distance under which the ω-class is exactly the 1-Lipschitz
/// class, so one sharp-bound engine serves every modulus.
pub fn transform_distance<T, M>(
    dt: &DistanceSpace<T, M>,
    w: &ModulusOfContinuity<M>,
) -> DistanceSpace<T, M>
where
    T: Send + Sync + 'static,
    M: Clone + Send + Sync + 'static,
{
    let dt_inner = dt.clone();
    let w = w.clone();
    DistanceSpace::new_fallible(dt.monoid().clone(), dt.tier(), move |x: &T, y: &T| {
        dt_inner.try_eval(x, y).map(|m| w.eval(&m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{check_agreement, check_distance_axioms, fixtures};
    use crate::instances::grid::Grid;
    use crate::sample::DEFAULT_TUPLE_BUDGET;

    const BUDGET: usize = DEFAULT_TUPLE_BUDGET;

    fn grid257() -> Arc<Vec<f64>> {
        Grid::uniform(-1.0, 1.0, 257).unwrap().into_shared()
    }

    fn scalar_f(grid: Arc<Vec<f64>>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> SampledFunction<f64, f64> {
        SampledFunction::new(grid, move |t: &f64| f(*t))
    }

    #[test]
    fn identity_sqrt_and_cbrt_pass_the_modulus_laws() {
        let sample = Sample::dyadic_nonneg(42, 200);
        for w in [identity_modulus(), sqrt_modulus(), cbrt_modulus()] {
            let report = check_modulus_axioms(&w, &sample, BUDGET);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn componentwise_sqrt_passes_on_vectors() {
        let w = vec_power_modulus(0.5, 2);
        let report = check_modulus_axioms(&w, &Sample::dyadic_nonneg_vecs(42, 120, 2), BUDGET);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn square_modulus_fails_semi_additivity_only() {
        let report =
            check_modulus_axioms(&controls::square_modulus(), &Sample::dyadic_nonneg(42, 100), BUDGET);
        assert!(report.law("vanishes-at-theta").unwrap().passed());
        assert!(report.law("non-decreasing").unwrap().passed());
        let semi = report.law("semi-additive").unwrap();
        assert!(!semi.passed());
        assert!(semi.witness.is_some());
    }

    #[test]
    fn on_lattice_kink_is_1_lipschitz_with_zero_slack() {
        let f = scalar_f(grid257(), |t| (t - 0.25).abs());
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let report = check_class_membership(&f, &dt, &dt, &identity_modulus(), &0.0);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn off_lattice_kink_needs_only_ulp_slack() {
        // 0.3 is not a dyadic rational: collinear node pairs can round a
        // real equality into a one-ulp violation, so the membership check
        // gets a slack far above ulp yet far below any real violation.
        let f = scalar_f(grid257(), |t| (t - 0.3).abs());
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let report = check_class_membership(&f, &dt, &dt, &identity_modulus(), &1e-12);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn steep_function_fails_membership_with_witness() {
        let f = scalar_f(grid257(), |t| 2.0 * t);
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let report = check_class_membership(&f, &dt, &dt, &identity_modulus(), &0.0);
        let law = report.law("lipschitz-membership").unwrap();
        assert!(!law.passed());
        assert_eq!(law.witness.as_ref().unwrap().tuple, "(t1=-1.0, t2=-0.9921875)");
    }

    #[test]
    fn sqrt_profile_is_in_the_sqrt_class_exactly() {
        let f = scalar_f(grid257(), |t| t.abs().sqrt());
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let report = check_class_membership(&f, &dt, &dt, &sqrt_modulus(), &0.0);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn composition_with_a_contraction_stays_in_class() {
        let grid = grid257();
        let f = scalar_f(grid.clone(), f64::abs);
        let g = compose(&f, |x: &f64| 0.5 * x);
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        assert!(check_class_membership(&g, &dt, &dt, &identity_modulus(), &0.0).passed());
        for t in grid.iter() {
            assert_eq!(g.eval(t), 0.5 * t.abs());
        }
    }

    #[test]
    fn composition_matches_pointwise_application_randomly() {
        use rand::Rng;
        let grid = grid257();
        let f = scalar_f(grid.clone(), |t| t * t);
        let g = compose(&f, |x: &f64| x + 1.0);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(4);
        for _ in 0..1000 {
            let t = rng.gen_range(-1.0..1.0);
            assert_eq!(g.eval(&t), t * t + 1.0);
        }
    }

    #[test]
    fn section_of_identity_is_distance_to_the_point() {
        let grid = grid257();
        let f = scalar_f(grid.clone(), |t| t);
        let dx = fixtures::absdiff_line(Tier::PseudoMetric);
        let section = distance_section(&f, &dx, &0.0).unwrap();
        for t in grid.iter() {
            assert_eq!(section.eval(t), t.abs());
        }
    }

    #[test]
    fn section_of_a_constant_vanishes() {
        let f = SampledFunction::constant(grid257(), 3.25);
        let dx = fixtures::absdiff_line(Tier::PseudoMetric);
        let section = distance_section(&f, &dx, &0.5).unwrap();
        assert!(section.values().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn section_recovers_the_kink_at_its_center() {
        let grid = grid257();
        let f = scalar_f(grid.clone(), |t| (t - 0.25).abs());
        let dx = fixtures::absdiff_line(Tier::PseudoMetric);
        let section = distance_section(&f, &dx, &0.25).unwrap();
        for t in grid.iter() {
            assert_eq!(section.eval(t), (t - 0.25).abs());
        }
    }

    #[test]
    fn sections_refuse_distances_without_the_agreement_law() {
        let f = scalar_f(grid257(), |t| t);
        let metric_only = crate::distance::fixtures::controls::log_ratio();
        let err = distance_section(&f, &metric_only, &1.0).unwrap_err();
        assert_eq!(err, TierViolation { found: Tier::Metric });
        assert!(err.to_string().contains("metric"));
    }

    #[test]
    fn identity_transform_reproduces_the_distance_bit_for_bit() {
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let transformed = transform_distance(&dt, &identity_modulus());
        assert_eq!(transformed.tier(), Tier::PseudoMetric);
        let sample = Sample::dyadic_reals(3, 100);
        for a in &sample.elements {
            for b in &sample.elements {
                assert_eq!(transformed.eval(a, b), dt.eval(a, b));
            }
        }
    }

    #[test]
    fn sqrt_transform_hits_known_values_and_stays_a_pseudo_metric() {
        let dt = fixtures::absdiff_line(Tier::PseudoMetric);
        let transformed = transform_distance(&dt, &sqrt_modulus());
        assert_eq!(transformed.eval(&0.0, &1.0), 1.0);
        assert_eq!(transformed.eval(&0.0, &0.25), 0.5);

        let sample = Sample::dyadic_reals(21, 150);
        assert!(check_distance_axioms(&transformed, &sample, BUDGET).passed());
        let ambient = fixtures::absdiff_line(Tier::PseudoMetric);
        let agree = check_agreement(&transformed, &ambient, &sample, BUDGET);
        assert!(agree.passed(), "{agree}");
    }
}
