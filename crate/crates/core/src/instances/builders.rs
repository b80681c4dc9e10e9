//! Constructors wiring each shipped instance: operator bundle, distances,
//! monoid and gauge, all over one shared grid.

use std::sync::Arc;

use crate::distance::{fixtures, DistanceSpace, Tier};
use crate::engine::{scalar_gauge, vector_gauge, MetricGauge, OperatorQuadruple};
use crate::instances::grid::{trapezoid, Grid, GridError};
use crate::instances::sets::{minkowski_riemann_integral, FiniteSet, SetError, MAX_INTEGRATION_NODES};
use crate::lipschitz::SampledFunction;
use crate::order::OrderedMonoid;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InstanceError {
    #[error("direction has {found} components, the instance needs {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// An instance ready for auditing: the bundle and every companion
/// structure the engine checks consume.
pub struct WiredInstance<T, X, Y, M> {
    pub quadruple: OperatorQuadruple<T, X, Y, M>,
    pub dt: DistanceSpace<T, M>,
    pub dx: DistanceSpace<X, M>,
    pub dy: DistanceSpace<Y, M>,
    pub hm: DistanceSpace<M, M>,
    pub monoid: OrderedMonoid<M>,
    pub gauge: MetricGauge<M>,
}

impl<T, X, Y, M> std::fmt::Debug for WiredInstance<T, X, Y, M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WiredInstance").finish_non_exhaustive()
    }
}

/// Uniform grid on [−1, 1] with the given breakpoints registered —
/// sweep points must be nodes so extremal kinks land on the grid.
pub fn default_grid(nodes: usize, breakpoints: &[f64]) -> Result<Grid, GridError> {
    Ok(Grid::uniform(-1.0, 1.0, nodes)?.with_breakpoints(breakpoints))
}

fn half_trapezoid(nodes: &[f64], values: &[f64]) -> f64 {
    0.5 * trapezoid(nodes, values)
}

/// Averaging on the line: Λ = λ = ½∫ by trapezoid, identity lift, embed
/// and projector. The flagship: its bound at t is exactly (1 + t²)/2.
pub fn build_scalar_instance(grid: Grid) -> WiredInstance<f64, f64, f64, f64> {
    let shared = grid.into_shared();
    let g1 = Arc::clone(&shared);
    let g2 = Arc::clone(&shared);
    let quadruple = OperatorQuadruple::new(
        shared,
        move |f: &SampledFunction<f64, f64>| half_trapezoid(&g1, &f.values()),
        move |g: &SampledFunction<f64, f64>| half_trapezoid(&g2, &g.values()),
        |m: &f64| *m,
        |m: &f64| *m,
    )
    .with_projector(|x: &f64| *x);
    WiredInstance {
        quadruple,
        dt: fixtures::absdiff_line(Tier::PseudoMetric),
        dx: fixtures::absdiff_line(Tier::PseudoMetric),
        dy: fixtures::absdiff_line(Tier::PseudoMetric),
        hm: fixtures::absdiff_line(Tier::PseudoMetric),
        monoid: crate::order::nonneg_reals(),
        gauge: scalar_gauge(),
    }
}

/// Componentwise averaging into ℝ^dim, with lift and embed multiplying
/// by a fixed direction vector. The direction must have unit Euclidean
/// length for the embedding to be distance-compatible; passing a
/// non-unit vector builds fine and then fails the diagram audit, which
/// is the intended negative control.
pub fn build_vector_instance(
    grid: Grid,
    dim: usize,
    direction: &[f64],
) -> Result<WiredInstance<f64, Vec<f64>, Vec<f64>, f64>, InstanceError> {
    if direction.len() != dim {
        return Err(InstanceError::DimensionMismatch { expected: dim, found: direction.len() });
    }
    let direction = direction.to_vec();
    let shared = grid.into_shared();
    let g1 = Arc::clone(&shared);
    let g2 = Arc::clone(&shared);
    let lift_dir = direction.clone();
    let embed_dir = direction;
    let quadruple = OperatorQuadruple::new(
        shared,
        move |f: &SampledFunction<f64, Vec<f64>>| {
            let values = f.values();
            (0..dim)
                .map(|j| {
                    let series: Vec<f64> = values.iter().map(|v| v[j]).collect();
                    half_trapezoid(&g1, &series)
                })
                .collect()
        },
        move |g: &SampledFunction<f64, f64>| half_trapezoid(&g2, &g.values()),
        move |m: &f64| lift_dir.iter().map(|d| m * d).collect(),
        move |m: &f64| embed_dir.iter().map(|d| m * d).collect(),
    );
    Ok(WiredInstance {
        quadruple,
        dt: fixtures::absdiff_line(Tier::PseudoMetric),
        dx: fixtures::euclidean(dim),
        dy: fixtures::euclidean(dim),
        hm: fixtures::absdiff_line(Tier::PseudoMetric),
        monoid: crate::order::nonneg_reals(),
        gauge: scalar_gauge(),
    })
}

/// Two scalar channels with the componentwise value monoid ℝ₊²: the
/// order on bounds is genuinely partial, and every bound equals the
/// scalar instance's bound duplicated in both components.
pub fn build_pair_instance(grid: Grid) -> WiredInstance<f64, Vec<f64>, Vec<f64>, Vec<f64>> {
    const DIM: usize = 2;
    let shared = grid.into_shared();
    let g1 = Arc::clone(&shared);
    let g2 = Arc::clone(&shared);
    let componentwise_half_integral = move |nodes: &[f64], values: &[Vec<f64>]| -> Vec<f64> {
        (0..DIM)
            .map(|j| {
                let series: Vec<f64> = values.iter().map(|v| v[j]).collect();
                half_trapezoid(nodes, &series)
            })
            .collect()
    };
    let lam = componentwise_half_integral.clone();
    let quadruple = OperatorQuadruple::new(
        shared,
        move |f: &SampledFunction<f64, Vec<f64>>| componentwise_half_integral(&g1, &f.values()),
        move |g: &SampledFunction<f64, Vec<f64>>| lam(&g2, &g.values()),
        |m: &Vec<f64>| m.clone(),
        |m: &Vec<f64>| m.clone(),
    );
    let dt = DistanceSpace::new(
        crate::order::nonneg_vectors(DIM),
        Tier::PseudoMetric,
        |a: &f64, b: &f64| {
            let d = (a - b).abs();
            vec![d; DIM]
        },
    );
    WiredInstance {
        quadruple,
        dt,
        dx: fixtures::absdiff_componentwise(DIM),
        dy: fixtures::absdiff_componentwise(DIM),
        hm: fixtures::absdiff_componentwise(DIM),
        monoid: crate::order::nonneg_vectors(DIM),
        gauge: vector_gauge(DIM),
    }
}

/// Finite subsets of ℝ under Hausdorff distance: Λ is the interval-valued
/// set integral, lift and embed are singleton inclusions, and the
/// projector collapses a set to its endpoint hull.
pub fn build_setvalued_instance(
    grid: Grid,
) -> Result<WiredInstance<f64, FiniteSet, FiniteSet, f64>, InstanceError> {
    if grid.len() > MAX_INTEGRATION_NODES {
        return Err(InstanceError::Set(SetError::TooLarge {
            what: "integration grid",
            len: grid.len(),
            cap: MAX_INTEGRATION_NODES,
        }));
    }
    let shared = grid.into_shared();
    let g1 = Arc::clone(&shared);
    let g2 = Arc::clone(&shared);
    let quadruple = OperatorQuadruple::new(
        shared,
        move |f: &SampledFunction<f64, FiniteSet>| {
            minkowski_riemann_integral(f, &g1).expect("grid length validated at construction")
        },
        move |g: &SampledFunction<f64, f64>| half_trapezoid(&g2, &g.values()),
        |m: &f64| FiniteSet::singleton(*m),
        |m: &f64| FiniteSet::singleton(*m),
    )
    .with_projector(|s: &FiniteSet| s.hull());
    Ok(WiredInstance {
        quadruple,
        dt: fixtures::absdiff_line(Tier::PseudoMetric),
        dx: fixtures::hausdorff_sets(),
        dy: fixtures::hausdorff_sets(),
        hm: fixtures::absdiff_line(Tier::PseudoMetric),
        monoid: crate::order::nonneg_reals(),
        gauge: scalar_gauge(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{
        check_diagram, check_operator_agreement, corollary_bound_with_projector, deviation,
        extremal_function, ostrowski_bound, verify_sharpness,
    };

    fn grid257() -> Grid {
        Grid::uniform(-1.0, 1.0, 257).unwrap()
    }

    fn grid65() -> Grid {
        Grid::uniform(-1.0, 1.0, 65).unwrap()
    }

    #[test]
    fn scalar_instance_reproduces_the_classical_bound_exactly() {
        let inst = build_scalar_instance(grid257());
        for t in [-1.0, -0.5, 0.0, 0.25, 0.5, 1.0] {
            let bound = ostrowski_bound(&inst.quadruple, &inst.dt, &t);
            assert_eq!(bound, (1.0 + t * t) / 2.0, "t={t}");
        }
        let report = verify_sharpness(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &0.5, 1e-12).unwrap();
        assert_eq!(report.bound, 0.625);
        assert_eq!(report.deviation, 0.625);
        assert_eq!(report.gap, 0.0);
    }

    #[test]
    fn scalar_bound_tracks_the_closed_form_at_off_lattice_points() {
        let t = 0.3;
        let inst = build_scalar_instance(grid257().with_breakpoints(&[t]));
        let bound = ostrowski_bound(&inst.quadruple, &inst.dt, &t);
        assert!((bound - (1.0 + t * t) / 2.0).abs() < 1e-12, "bound {bound}");
    }

    #[test]
    fn vector_instance_with_axis_direction_is_exact() {
        let inst = build_vector_instance(grid257(), 2, &[1.0, 0.0]).unwrap();
        let report = verify_sharpness(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &0.5, 1e-12).unwrap();
        assert_eq!(report.bound, 0.625);
        assert_eq!(report.gap, 0.0);

        let g = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| t.abs());
        let diagram = check_diagram(&inst.quadruple, &g, &inst.dt, &inst.dy, &inst.gauge, &0.5, 1e-12);
        assert!(diagram.passed(), "{diagram}");
    }

    #[test]
    fn vector_instance_with_tilted_unit_direction_passes_at_tolerance() {
        let inst = build_vector_instance(grid257(), 2, &[0.6, 0.8]).unwrap();
        let report = verify_sharpness(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &0.0, 1e-6).unwrap();
        assert!((report.bound - 0.5).abs() < 1e-12);
        assert!(report.gap < 1e-9, "near-exact despite the tilt: {}", report.gap);
    }

    #[test]
    fn vector_agreement_holds_for_a_nonlinear_member() {
        let inst = build_vector_instance(grid257(), 2, &[1.0, 0.0]).unwrap();
        let f = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| vec![*t, t.abs()]);
        let report = check_operator_agreement(
            &inst.quadruple,
            &f,
            &inst.dx,
            &inst.dy,
            &inst.gauge,
            &0.0,
            1e-9,
        );
        assert!(report.passed(), "{report}");
        // Independent quadrature values: deviation ‖(0, ½) − 0‖ = ½ and
        // majorant ½∫√2|τ| = √2/2.
        let dev = deviation(&inst.quadruple, &f, &inst.dy, &0.0);
        assert!((dev - 0.5).abs() < 1e-12);
    }

    #[test]
    fn non_unit_direction_fails_the_embedding_audit() {
        let inst = build_vector_instance(grid257(), 2, &[1.0, 1.0]).unwrap();
        let g = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| t.abs());
        let diagram = check_diagram(&inst.quadruple, &g, &inst.dt, &inst.dy, &inst.gauge, &0.5, 1e-9);
        assert!(!diagram.law("embed-isometry-at-bound").unwrap().passed());
        assert!(diagram.law("majorant-at-theta").unwrap().passed());
    }

    #[test]
    fn wrong_direction_length_is_rejected() {
        let err = build_vector_instance(grid257(), 2, &[1.0, 0.0, 0.0]).unwrap_err();
        assert_eq!(err, InstanceError::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn pair_instance_duplicates_the_scalar_bound_componentwise() {
        let scalar = build_scalar_instance(grid257());
        let pair = build_pair_instance(grid257());
        for t in [-0.5, 0.0, 0.5, 1.0] {
            let s = ostrowski_bound(&scalar.quadruple, &scalar.dt, &t);
            let p = ostrowski_bound(&pair.quadruple, &pair.dt, &t);
            assert_eq!(p, vec![s, s], "t={t}");
        }
        let report = verify_sharpness(&pair.quadruple, &pair.dt, &pair.dy, &pair.gauge, &0.0, 1e-12).unwrap();
        assert_eq!(report.bound, vec![0.5, 0.5]);
        assert_eq!(report.deviation, vec![0.5, 0.5]);
        assert_eq!(report.gap, 0.0);
    }

    #[test]
    fn pair_monoid_order_is_genuinely_partial() {
        let pair = build_pair_instance(grid257());
        let a = vec![1.0, 0.0];
        let b = vec![0.0, 1.0];
        assert!(!pair.monoid.leq(&a, &b) && !pair.monoid.leq(&b, &a));
    }

    #[test]
    fn setvalued_instance_is_sharp_and_projector_consistent() {
        let inst = build_setvalued_instance(grid65()).unwrap();
        let report = verify_sharpness(&inst.quadruple, &inst.dt, &inst.dy, &inst.gauge, &0.0, 1e-12).unwrap();
        assert_eq!(report.bound, 0.5);
        assert_eq!(report.gap, 0.0);

        let extremal = extremal_function(&inst.quadruple, &inst.dt, &0.0);
        let projected = corollary_bound_with_projector(
            &inst.quadruple,
            &inst.dt,
            &inst.dx,
            &extremal,
            &inst.gauge,
            &0.0,
            1e-12,
        )
        .unwrap();
        assert_eq!(projected.bound, 0.5);
        assert_eq!(projected.gap, 0.0);
    }

    #[test]
    fn setvalued_projected_bound_holds_for_an_envelope_member() {
        let inst = build_setvalued_instance(grid65()).unwrap();
        let f = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| {
            FiniteSet::new(vec![-t.abs(), t.abs()]).unwrap()
        });
        let report = corollary_bound_with_projector(
            &inst.quadruple,
            &inst.dt,
            &inst.dx,
            &f,
            &inst.gauge,
            &0.0,
            1e-9,
        )
        .unwrap();
        assert!(report.dominated);
        assert!((report.deviation - 0.5).abs() < 1e-12, "Hausdorff([−½,½], {{0}}) = ½");
    }

    #[test]
    fn hull_projector_leaves_integrals_fixed() {
        let inst = build_setvalued_instance(grid65()).unwrap();
        let f = SampledFunction::new(inst.quadruple.shared_grid(), |t: &f64| {
            FiniteSet::new(vec![-t.abs(), 0.25 * t, t.abs()]).unwrap()
        });
        let lam = inst.quadruple.apply(&f);
        assert_eq!(inst.quadruple.project_point(&lam).unwrap(), lam);
    }

    #[test]
    fn setvalued_rejects_oversized_grids() {
        let err = build_setvalued_instance(grid257()).unwrap_err();
        assert!(matches!(
            err,
            InstanceError::Set(SetError::TooLarge { what: "integration grid", len: 257, cap: 129 })
        ));
    }

    #[test]
    fn default_grid_registers_breakpoints() {
        let g = default_grid(5, &[0.3]).unwrap();
        assert_eq!(g.nodes(), &[-1.0, -0.5, 0.0, 0.3, 0.5, 1.0]);
        assert!(default_grid(1, &[]).is_err());
    }
}
