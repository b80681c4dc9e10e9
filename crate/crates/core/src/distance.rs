//! Distance maps valued in an ordered monoid, classified by how much
//! metric structure they carry, plus the law suites that audit them.
//!
//! A distance map assigns to each pair of carrier points a value in an
//! ordered monoid `M`. Three tiers are tracked:
//!
//! * [`Tier::Distance`] — symmetry and vanishing on the diagonal;
//! * [`Tier::PseudoMetric`] — additionally compatible with an ambient
//!   distance on `M` itself (the reverse-triangle law checked by
//!   [`check_agreement`]);
//! * [`Tier::Metric`] — point-separating with the classical triangle law.
//!
//! The tiers are genuinely distinct: [`fixtures::controls::log_ratio`] is
//! a full metric on the non-negative reals that still fails the agreement
//! law against itself, and the discrete ambient distance turns plain
//! absolute difference into an agreement failure as well. Those two
//! expected failures ship as fixtures with designated samples that pin
//! their witnesses.

use std::fmt;
use std::sync::Arc;

use crate::order::{NoSupremum, OrderedMonoid};
use crate::report::{witness_tuple, AxiomReport, CheckOutcome, LawScan, Witness};
use crate::sample::{for_each_pair, for_each_triple, Sample};

/// How much metric structure a distance map is declared to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tier {
    /// Symmetric, vanishing on the diagonal.
    Distance,
    /// Distance that also satisfies the agreement law with the ambient
    /// distance on its value monoid.
    PseudoMetric,
    /// Point-separating distance with the triangle law.
    Metric,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tier::Distance => write!(f, "distance"),
            Tier::PseudoMetric => write!(f, "pseudo-metric"),
            Tier::Metric => write!(f, "metric"),
        }
    }
}

type DistanceFn<P, M> = Arc<dyn Fn(&P, &P) -> Result<M, NoSupremum> + Send + Sync>;

/// A distance map `h : P × P → M` together with the ordered monoid its
/// values live in and the structural tier it claims.
///
/// Distances built from binary suprema may be undefined on some pairs
/// when the order is not a lattice; [`DistanceSpace::try_eval`] surfaces
/// that, while [`DistanceSpace::eval`] panics on it.
pub struct DistanceSpace<P, M> {
    h: DistanceFn<P, M>,
    monoid: OrderedMonoid<M>,
    tier: Tier,
}

impl<P, M: Clone> Clone for DistanceSpace<P, M> {
    fn clone(&self) -> Self {
        DistanceSpace { h: Arc::clone(&self.h), monoid: self.monoid.clone(), tier: self.tier }
    }
}

impl<P, M: Clone> DistanceSpace<P, M> {
    /// Wrap a total distance map.
    pub fn new(
        monoid: OrderedMonoid<M>,
        tier: Tier,
        h: impl Fn(&P, &P) -> M + Send + Sync + 'static,
    ) -> Self {
        DistanceSpace { h: Arc::new(move |x, y| Ok(h(x, y))), monoid, tier }
    }

    /// Wrap a distance map that may be undefined on some pairs.
    pub fn new_fallible(
        monoid: OrderedMonoid<M>,
        tier: Tier,
        h: impl Fn(&P, &P) -> Result<M, NoSupremum> + Send + Sync + 'static,
    ) -> Self {
        DistanceSpace { h: Arc::new(h), monoid, tier }
    }

    /// Evaluate, panicking when the distance is undefined for the pair.
    pub fn eval(&self, x: &P, y: &P) -> M {
        match (self.h)(x, y) {
            Ok(m) => m,
            Err(e) => panic!("distance undefined for this pair: {e}"),
        }
    }

    /// Evaluate, surfacing undefined pairs as an error.
    pub fn try_eval(&self, x: &P, y: &P) -> Result<M, NoSupremum> {
        (self.h)(x, y)
    }

    pub fn tier(&self) -> Tier {
        self.tier
    }

    pub fn monoid(&self) -> &OrderedMonoid<M> {
        &self.monoid
    }
}

/// Asymmetric difference gauge `e : M × M → M` used to build distances
/// on the monoid itself via `h(x, y) = sup{e(x, y), e(y, x)}`.
pub struct EFunction<M> {
    e: Arc<dyn Fn(&M, &M) -> M + Send + Sync>,
    monoid: OrderedMonoid<M>,
}

impl<M: Clone> Clone for EFunction<M> {
    fn clone(&self) -> Self {
        EFunction { e: Arc::clone(&self.e), monoid: self.monoid.clone() }
    }
}

impl<M: Clone> EFunction<M> {
    pub fn new(monoid: OrderedMonoid<M>, e: impl Fn(&M, &M) -> M + Send + Sync + 'static) -> Self {
        EFunction { e: Arc::new(e), monoid }
    }

    pub fn eval(&self, x: &M, y: &M) -> M {
        (self.e)(x, y)
    }

    pub fn monoid(&self) -> &OrderedMonoid<M> {
        &self.monoid
    }
}

/// Truncated difference `e(x, y) = max{x − y, 0}` on the non-negative
/// reals; its symmetrization is exactly absolute difference.
pub fn truncated_diff() -> EFunction<f64> {
    EFunction::new(crate::order::nonneg_reals(), |x: &f64, y: &f64| (x - y).max(0.0))
}

/// Componentwise truncated difference on non-negative vectors.
pub fn truncated_diff_vec(dim: usize) -> EFunction<Vec<f64>> {
    EFunction::new(crate::order::nonneg_vectors(dim), move |x: &Vec<f64>, y: &Vec<f64>| {
        x.iter().zip(y).map(|(a, b)| (a - b).max(0.0)).collect()
    })
}

/// Symmetrize a difference gauge into a distance on the monoid carrier:
/// `h(x, y) = sup{e(x, y), e(y, x)}`. Pairs whose gauge values have no
/// least upper bound surface through [`DistanceSpace::try_eval`].
pub fn metric_from_e<M: Clone + fmt::Debug + Send + Sync + 'static>(
    e: &EFunction<M>,
) -> DistanceSpace<M, M> {
    let monoid = e.monoid().clone();
    let gauge = e.clone();
    DistanceSpace::new_fallible(monoid.clone(), Tier::Metric, move |x: &M, y: &M| {
        monoid.sup(&gauge.eval(x, y), &gauge.eval(y, x))
    })
}

/// Diagonal vanishing and symmetry — the laws every tier must satisfy.
pub fn check_distance_axioms<P, M>(
    d: &DistanceSpace<P, M>,
    sample: &Sample<P>,
    budget: usize,
) -> AxiomReport
where
    P: Clone + fmt::Debug,
    M: Clone + PartialEq + fmt::Debug,
{
    let mut report = AxiomReport::new("distance");
    report.checks.push(law_self_distance(d, sample));
    report.checks.push(law_symmetry(d, sample, budget));
    report
}

/// The agreement law tying a distance to an ambient distance on its value
/// monoid: `hm(d(x, x1), d(x, x2)) ≤ d(x1, x2)` for all triples.
pub fn check_agreement<P, M>(
    d: &DistanceSpace<P, M>,
    hm: &DistanceSpace<M, M>,
    sample: &Sample<P>,
    budget: usize,
) -> AxiomReport
where
    P: Clone + fmt::Debug,
    M: Clone + fmt::Debug,
{
    let mon = d.monoid();
    let mut scan = LawScan::new("agreement");
    for_each_triple(sample, budget, |x, x1, x2| {
        let lhs = hm.eval(&d.eval(x, x1), &d.eval(x, x2));
        let rhs = d.eval(x1, x2);
        let ok = mon.leq(&lhs, &rhs);
        scan.case(ok, || Witness {
            tuple: witness_tuple!(x = x, x1 = x1, x2 = x2),
            observed: format!("lhs {lhs:?} not ≤ rhs {rhs:?}"),
        });
    });
    let mut report = AxiomReport::new("agreement");
    report.checks.push(scan.finish());
    report
}

/// Full metric law suite: diagonal vanishing, point separation, symmetry
/// and the triangle law.
pub fn check_metric_axioms<P, M>(
    d: &DistanceSpace<P, M>,
    sample: &Sample<P>,
    budget: usize,
) -> AxiomReport
where
    P: Clone + PartialEq + fmt::Debug,
    M: Clone + PartialEq + fmt::Debug,
{
    let mon = d.monoid().clone();

    let mut separation = LawScan::new("separation");
    for_each_pair(sample, budget, |x, y| {
        let h = d.eval(x, y);
        let ok = !mon.eq(&h, mon.theta()) || x == y;
        separation.case(ok, || Witness {
            tuple: witness_tuple!(x = x, y = y),
            observed: format!("h = {h:?} vanishes for distinct points"),
        });
    });

    let mut triangle = LawScan::new("triangle");
    for_each_triple(sample, budget, |x, y, z| {
        let lhs = d.eval(x, y);
        let rhs = mon.plus(&d.eval(x, z), &d.eval(z, y));
        let ok = mon.leq(&lhs, &rhs);
        triangle.case(ok, || Witness {
            tuple: witness_tuple!(x = x, y = y, z = z),
            observed: format!("lhs {lhs:?} not ≤ rhs {rhs:?}"),
        });
    });

    let mut report = AxiomReport::new("metric");
    report.checks.push(law_self_distance(d, sample));
    report.checks.push(separation.finish());
    report.checks.push(law_symmetry(d, sample, budget));
    report.checks.push(triangle.finish());
    report
}

fn law_self_distance<P, M>(d: &DistanceSpace<P, M>, sample: &Sample<P>) -> CheckOutcome
where
    P: Clone + fmt::Debug,
    M: Clone + PartialEq + fmt::Debug,
{
    let mon = d.monoid();
    let mut scan = LawScan::new("self-distance");
    for x in &sample.elements {
        let h = d.eval(x, x);
        let ok = mon.eq(&h, mon.theta());
        scan.case(ok, || Witness {
            tuple: witness_tuple!(x = x),
            observed: format!("h(x, x) = {h:?}, not the zero element"),
        });
    }
    scan.finish()
}

fn law_symmetry<P, M>(d: &DistanceSpace<P, M>, sample: &Sample<P>, budget: usize) -> CheckOutcome
where
    P: Clone + fmt::Debug,
    M: Clone + PartialEq + fmt::Debug,
{
    let mut scan = LawScan::new("symmetry");
    for_each_pair(sample, budget, |x, y| {
        let fwd = d.eval(x, y);
        let bwd = d.eval(y, x);
        let ok = fwd == bwd;
        scan.case(ok, || Witness {
            tuple: witness_tuple!(x = x, y = y),
            observed: format!("h(x, y) = {fwd:?} but h(y, x) = {bwd:?}"),
        });
    });
    scan.finish()
}

/// Law suite for difference gauges: the order characterization
/// `x ≤ y ⟺ e(x, y) = θ`, the bound `e(x, θ) ≤ x`, the triangle and
/// translation-contraction laws, plus monotonicity in the first argument
/// (a consequence of the four, audited separately).
pub fn check_e_axioms<M>(e: &EFunction<M>, sample: &Sample<M>, budget: usize) -> AxiomReport
where
    M: Clone + fmt::Debug,
{
    let mon = e.monoid().clone();
    let theta = mon.theta().clone();

    let mut order_char = LawScan::new("order-characterization");
    for_each_pair(sample, budget, |x, y| {
        let value = e.eval(x, y);
        let ok = mon.leq(x, y) == mon.eq(&value, &theta);
        order_char.case(ok, || Witness {
            tuple: witness_tuple!(x = x, y = y),
            observed: format!("e(x, y) = {value:?} disagrees with the order"),
        });
    });

    let mut theta_bound = LawScan::new("theta-bound");
    for x in &sample.elements {
        let value = e.eval(x, &theta);
        let ok = mon.leq(&value, x);
        theta_bound.case(ok, || Witness {
            tuple: witness_tuple!(x = x),
            observed: format!("e(x, θ) = {value:?} not ≤ x"),
        });
    }

    let mut triangle = LawScan::new("triangle");
    for_each_triple(sample, budget, |x, y, z| {
        let lhs = e.eval(x, y);
        let rhs = mon.plus(&e.eval(x, z), &e.eval(z, y));
        let ok = mon.leq(&lhs, &rhs);
        triangle.case(ok, || Witness {
            tuple: witness_tuple!(x = x, y = y, z = z),
            observed: format!("lhs {lhs:?} not ≤ rhs {rhs:?}"),
        });
    });

    let mut translation = LawScan::new("translation-contraction");
    for_each_triple(sample, budget, |z, x, y| {
        let lhs = e.eval(&mon.plus(z, x), &mon.plus(z, y));
        let rhs = e.eval(x, y);
        let ok = mon.leq(&lhs, &rhs);
        translation.case(ok, || Witness {
            tuple: witness_tuple!(z = z, x = x, y = y),
            observed: format!("lhs {lhs:?} not ≤ rhs {rhs:?}"),
        });
    });

    let mut first_arg = LawScan::new("first-argument-monotone");
    for_each_triple(sample, budget, |x1, x2, y| {
        let ok = !mon.leq(x1, x2) || mon.leq(&e.eval(x1, y), &e.eval(x2, y));
        first_arg.case(ok, || Witness {
            tuple: witness_tuple!(x1 = x1, x2 = x2, y = y),
            observed: "x1 ≤ x2 but e(x1, y) not ≤ e(x2, y)".into(),
        });
    });

    let mut report = AxiomReport::new("e-function");
    report.checks.push(order_char.finish());
    report.checks.push(theta_bound.finish());
    report.checks.push(triangle.finish());
    report.checks.push(translation.finish());
    report.checks.push(first_arg.finish());
    report
}

/// Designated sample whose lexicographically first failing triple for the
/// ratio-based metric's self-agreement scan is `(1, 1, 2)`, yielding the
/// observed values 3/4 versus ln 2.
pub fn agreement_witness_sample() -> Sample<f64> {
    Sample::from_elements(vec![1.0, 2.0, 0.0, 0.5, 4.0], 0)
}

/// Designated sample whose first failing triple under the discrete
/// ambient distance is `(0.25, 0.25, 0.5)` — two points closer than one
/// apart, so the discrete jump overshoots their actual separation.
pub fn discrete_witness_sample() -> Sample<f64> {
    Sample::from_elements(vec![0.25, 0.5, 1.5, 3.0], 0)
}

/// Sample for the ratio-based metric: zero plus powers of two, so the
/// value set `{0, ln 2, 3/4, 1}` stays closed under the comparisons the
/// law suites make, keeping every check exact in floating point.
pub fn log_ratio_sample(seed: u64, n: usize) -> Sample<f64> {
    let pool: Vec<f64> =
        std::iter::once(0.0).chain((-10..=10).map(|k| (k as f64).exp2())).collect();
    Sample::generate(seed, n, move |rng| {
        use rand::Rng;
        pool[rng.gen_range(0..pool.len())]
    })
}

/// Ready-made distance spaces used by the operator instances and the
/// audit suites.
pub mod fixtures {
    use super::*;
    use crate::instances::sets::{hausdorff, FiniteSet};

    /// Absolute difference on the reals with a caller-declared tier
    /// (metric on the line; pseudo-metric when used as the ambient
    /// distance on the value monoid).
    pub fn absdiff_line(tier: Tier) -> DistanceSpace<f64, f64> {
        DistanceSpace::new(crate::order::nonneg_reals(), tier, |x: &f64, y: &f64| (x - y).abs())
    }

    /// Euclidean distance on `dim`-vectors.
    pub fn euclidean(dim: usize) -> DistanceSpace<Vec<f64>, f64> {
        DistanceSpace::new(
            crate::order::nonneg_reals(),
            Tier::PseudoMetric,
            move |x: &Vec<f64>, y: &Vec<f64>| {
                assert_eq!(x.len(), dim, "point dimension mismatch");
                assert_eq!(y.len(), dim, "point dimension mismatch");
                x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
            },
        )
    }

    /// Componentwise absolute difference, valued in non-negative vectors.
    pub fn absdiff_componentwise(dim: usize) -> DistanceSpace<Vec<f64>, Vec<f64>> {
        DistanceSpace::new(
            crate::order::nonneg_vectors(dim),
            Tier::PseudoMetric,
            move |x: &Vec<f64>, y: &Vec<f64>| {
                assert_eq!(x.len(), dim, "point dimension mismatch");
                assert_eq!(y.len(), dim, "point dimension mismatch");
                x.iter().zip(y).map(|(a, b)| (a - b).abs()).collect()
            },
        )
    }

    /// Hausdorff distance between finite point sets.
    pub fn hausdorff_sets() -> DistanceSpace<FiniteSet, f64> {
        DistanceSpace::new(
            crate::order::nonneg_reals(),
            Tier::PseudoMetric,
            |a: &FiniteSet, b: &FiniteSet| hausdorff(a, b),
        )
    }

    /// Fixtures that are *supposed* to fail a specific law, with the
    /// designated samples above pinning their witnesses.
    pub mod controls {
        use super::*;

        /// Constant distance 1: fails diagonal vanishing immediately.
        pub fn constant_one() -> DistanceSpace<f64, f64> {
            DistanceSpace::new(crate::order::nonneg_reals(), Tier::Distance, |_: &f64, _: &f64| 1.0)
        }

        /// Discrete 0/1 distance on the reals — a genuine metric, but as
        /// an ambient distance it breaks the agreement law for any
        /// distance taking values strictly between 0 and 1.
        pub fn discrete_on_reals() -> DistanceSpace<f64, f64> {
            DistanceSpace::new(crate::order::nonneg_reals(), Tier::Metric, |x: &f64, y: &f64| {
                if x == y {
                    0.0
                } else {
                    1.0
                }
            })
        }

        /// Ratio-based metric on the non-negative reals: 0 on the
        /// diagonal, 3/4 between zero and any positive point, otherwise
        /// `min{1, |ln(x/y)|}`. Passes the full metric suite yet fails
        /// self-agreement — the tiers really are independent.
        pub fn log_ratio() -> DistanceSpace<f64, f64> {
            DistanceSpace::new(crate::order::nonneg_reals(), Tier::Metric, |x: &f64, y: &f64| {
                if x == y {
                    0.0
                } else if *x == 0.0 || *y == 0.0 {
                    0.75
                } else {
                    // max/min ordering makes the value symmetric bit for bit.
                    let (lo, hi) = if x < y { (*x, *y) } else { (*y, *x) };
                    (hi / lo).ln().min(1.0)
                }
            })
        }

        /// Squared difference, declared a metric: fails the triangle law,
        /// first at collinear points with the middle one as the stop.
        pub fn squared_diff() -> DistanceSpace<f64, f64> {
            DistanceSpace::new(crate::order::nonneg_reals(), Tier::Metric, |x: &f64, y: &f64| {
                (x - y) * (x - y)
            })
        }

        /// Difference gauge that ignores its second argument: breaks the
        /// order characterization (`e(x, x)` should vanish but equals x).
        pub fn first_component_e() -> EFunction<f64> {
            EFunction::new(crate::order::nonneg_reals(), |x: &f64, _: &f64| *x)
        }

        /// Designated sample for the squared-difference triangle failure:
        /// first failing triple `(0, 2, 1)` with 4 > 1 + 1.
        pub fn squared_diff_sample() -> Sample<f64> {
            Sample::from_elements(vec![0.0, 1.0, 2.0], 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{self, controls};
    use super::*;
    use crate::sample::DEFAULT_TUPLE_BUDGET;

    const BUDGET: usize = DEFAULT_TUPLE_BUDGET;

    #[test]
    fn absdiff_satisfies_every_metric_law() {
        let d = fixtures::absdiff_line(Tier::Metric);
        let sample = Sample::dyadic_reals(42, 200);
        let report = check_metric_axioms(&d, &sample, BUDGET);
        assert!(report.passed(), "{report}");
        let agree =
            check_agreement(&d, &fixtures::absdiff_line(Tier::PseudoMetric), &sample, BUDGET);
        assert!(agree.passed(), "{agree}");
    }

    #[test]
    fn euclidean_is_a_pseudo_metric() {
        let d = fixtures::euclidean(2);
        let sample = Sample::dyadic_real_vecs(42, 120, 2);
        assert!(check_distance_axioms(&d, &sample, BUDGET).passed());
        let hm = fixtures::absdiff_line(Tier::PseudoMetric);
        let agree = check_agreement(&d, &hm, &sample, BUDGET);
        assert!(agree.passed(), "{agree}");
    }

    #[test]
    fn componentwise_distance_agrees_with_itself() {
        let d = fixtures::absdiff_componentwise(2);
        let sample = Sample::dyadic_real_vecs(7, 120, 2);
        assert!(check_distance_axioms(&d, &sample, BUDGET).passed());
        let hm = fixtures::absdiff_componentwise(2);
        assert!(check_agreement(&d, &hm, &sample, BUDGET).passed());
    }

    #[test]
    fn hausdorff_distance_is_a_pseudo_metric_on_sets() {
        use crate::instances::sets::FiniteSet;
        use rand::Rng;
        let d = fixtures::hausdorff_sets();
        let sample = Sample::generate(11, 80, |rng| {
            let n = rng.gen_range(1..=6);
            FiniteSet::new((0..n).map(|_| crate::sample::dyadic_real(rng)).collect()).unwrap()
        });
        assert!(check_distance_axioms(&d, &sample, BUDGET).passed());
        let hm = fixtures::absdiff_line(Tier::PseudoMetric);
        let agree = check_agreement(&d, &hm, &sample, BUDGET);
        assert!(agree.passed(), "{agree}");
    }

    #[test]
    fn constant_distance_fails_on_the_diagonal() {
        let d = controls::constant_one();
        let report = check_distance_axioms(&d, &Sample::from_elements(vec![0.0, 1.0], 0), BUDGET);
        let law = report.law("self-distance").unwrap();
        assert!(!law.passed());
        assert_eq!(law.witness.as_ref().unwrap().tuple, "(x=0.0)");
    }

    #[test]
    fn discrete_ambient_distance_breaks_agreement_for_absdiff() {
        let d = fixtures::absdiff_line(Tier::Metric);
        let hm = controls::discrete_on_reals();
        let report = check_agreement(&d, &hm, &discrete_witness_sample(), BUDGET);
        let law = report.law("agreement").unwrap();
        assert!(!law.passed());
        let witness = law.witness.as_ref().unwrap();
        assert_eq!(witness.tuple, "(x=0.25, x1=0.25, x2=0.5)");
        assert!(witness.observed.contains("1.0") && witness.observed.contains("0.25"));
    }

    #[test]
    fn discrete_distance_itself_is_a_metric() {
        let report =
            check_metric_axioms(&controls::discrete_on_reals(), &discrete_witness_sample(), BUDGET);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn log_ratio_passes_the_metric_suite() {
        let d = controls::log_ratio();
        let report = check_metric_axioms(&d, &log_ratio_sample(42, 200), BUDGET);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn log_ratio_fails_self_agreement_at_the_designated_witness() {
        let d = controls::log_ratio();
        let report = check_agreement(&d, &d, &agreement_witness_sample(), BUDGET);
        let law = report.law("agreement").unwrap();
        assert!(!law.passed());
        let witness = law.witness.as_ref().unwrap();
        assert_eq!(witness.tuple, "(x=1.0, x1=1.0, x2=2.0)");
        assert!(witness.observed.contains("0.75"), "{}", witness.observed);
        assert!(
            witness.observed.contains(&std::f64::consts::LN_2.to_string()),
            "{}",
            witness.observed
        );
    }

    #[test]
    fn squared_diff_fails_the_triangle_at_collinear_points() {
        let report = check_metric_axioms(
            &controls::squared_diff(),
            &controls::squared_diff_sample(),
            BUDGET,
        );
        let law = report.law("triangle").unwrap();
        assert!(!law.passed());
        assert_eq!(law.witness.as_ref().unwrap().tuple, "(x=0.0, y=2.0, z=1.0)");
        assert!(report.law("self-distance").unwrap().passed());
        assert!(report.law("symmetry").unwrap().passed());
    }

    #[test]
    fn truncated_diff_satisfies_the_difference_gauge_laws() {
        let e = truncated_diff();
        let report = check_e_axioms(&e, &Sample::dyadic_nonneg(42, 200), BUDGET);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn vector_truncated_diff_satisfies_the_laws() {
        let e = truncated_diff_vec(2);
        let report = check_e_axioms(&e, &Sample::dyadic_nonneg_vecs(42, 120, 2), BUDGET);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn symmetrized_truncated_diff_is_absolute_difference_bit_for_bit() {
        let built = metric_from_e(&truncated_diff());
        assert_eq!(built.tier(), Tier::Metric);
        let sample = Sample::dyadic_nonneg(42, 300);
        for x in &sample.elements {
            for y in &sample.elements {
                assert_eq!(built.eval(x, y), (x - y).abs(), "x={x} y={y}");
            }
        }
    }

    #[test]
    fn symmetrization_surfaces_missing_suprema() {
        let mon = crate::order::controls::flat_pair();
        let e = EFunction::new(mon, |x: &f64, y: &f64| if x == y { 0.0 } else { *x });
        let built = metric_from_e(&e);
        // e(1, 2) = 1 and e(2, 1) = 2 are incomparable tops with no join.
        assert!(built.try_eval(&1.0, &2.0).is_err());
        assert_eq!(built.try_eval(&1.0, &1.0), Ok(0.0));
    }

    #[test]
    fn first_component_gauge_fails_the_order_characterization() {
        let report =
            check_e_axioms(&controls::first_component_e(), &Sample::dyadic_nonneg(42, 60), BUDGET);
        let law = report.law("order-characterization").unwrap();
        assert!(!law.passed());
        assert!(law.witness.is_some());
    }

    #[test]
    fn suite_results_are_seed_stable() {
        let d = controls::log_ratio();
        let a = check_metric_axioms(&d, &log_ratio_sample(5, 150), BUDGET);
        let b = check_metric_axioms(&d, &log_ratio_sample(5, 150), BUDGET);
        assert_eq!(format!("{a}"), format!("{b}"));
    }
}
