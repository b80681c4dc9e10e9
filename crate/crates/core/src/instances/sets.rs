//! Finite point sets on the real line: the value space for set-valued
//! functions, with Hausdorff distance and an interval-valued set integral.

use crate::instances::grid::trapezoid;
use crate::lipschitz::SampledFunction;

/// Cap on the number of points a [`FiniteSet`] may hold.
pub const MAX_SET_POINTS: usize = 64;
/// Cap on the grid length accepted by [`minkowski_riemann_integral`].
pub const MAX_INTEGRATION_NODES: usize = 129;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("{what} has {len} elements, the cap is {cap}")]
    TooLarge { what: &'static str, len: usize, cap: usize },
    #[error("a finite set needs at least one point")]
    Empty,
    #[error("set points must be finite reals")]
    NonFinite,
}

/// Non-empty finite subset of the reals, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSet {
    points: Vec<f64>,
}

impl FiniteSet {
    pub fn new(mut points: Vec<f64>) -> Result<FiniteSet, SetError> {
        if points.is_empty() {
            return Err(SetError::Empty);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(SetError::NonFinite);
        }
        points.sort_by(|a, b| a.partial_cmp(b).expect("points are finite"));
        points.dedup();
        if points.len() > MAX_SET_POINTS {
            return Err(SetError::TooLarge {
                what: "point set",
                len: points.len(),
                cap: MAX_SET_POINTS,
            });
        }
        Ok(FiniteSet { points })
    }

    pub fn singleton(p: f64) -> FiniteSet {
        FiniteSet::new(vec![p]).expect("a single finite point is a valid set")
    }

    /// The two-point set `{lo, hi}` (collapses to a singleton when equal).
    pub fn interval(lo: f64, hi: f64) -> FiniteSet {
        FiniteSet::new(vec![lo, hi]).expect("two finite points form a valid set")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one point
    }

    pub fn min_point(&self) -> f64 {
        self.points[0]
    }

    pub fn max_point(&self) -> f64 {
        *self.points.last().expect("set is non-empty")
    }

    /// Endpoint hull `{min, max}` — the convex collapse of the set.
    pub fn hull(&self) -> FiniteSet {
        FiniteSet::interval(self.min_point(), self.max_point())
    }
}

impl std::fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Hausdorff distance between two finite sets: the larger of the two
/// directed farthest-to-nearest gaps.
pub fn hausdorff(a: &FiniteSet, b: &FiniteSet) -> f64 {
    directed_gap(a, b).max(directed_gap(b, a))
}

fn directed_gap(from: &FiniteSet, to: &FiniteSet) -> f64 {
    let mut worst = 0.0f64;
    for &p in from.points() {
        let mut nearest = f64::INFINITY;
        for &q in to.points() {
            nearest = nearest.min((p - q).abs());
        }
        worst = worst.max(nearest);
    }
    worst
}

/// Interval-valued integral of a set-valued function: the trapezoid rule
/// applied to the selection envelope, halved to match the averaging
/// operators used throughout. `{c}` integrates to `[c, c]` (times the
/// interval half-length), and envelope endpoints always come from the
/// shared [`trapezoid`] accumulation so scalar and set-valued runs agree
/// bit for bit.
pub fn minkowski_riemann_integral(
    f: &SampledFunction<f64, FiniteSet>,
    nodes: &[f64],
) -> Result<FiniteSet, SetError> {
    if nodes.len() > MAX_INTEGRATION_NODES {
        return Err(SetError::TooLarge {
            what: "integration grid",
            len: nodes.len(),
            cap: MAX_INTEGRATION_NODES,
        });
    }
    let mut mins = Vec::with_capacity(nodes.len());
    let mut maxs = Vec::with_capacity(nodes.len());
    for t in nodes {
        let set = f.eval(t);
        mins.push(set.min_point());
        maxs.push(set.max_point());
    }
    let lo = 0.5 * trapezoid(nodes, &mins);
    let hi = 0.5 * trapezoid(nodes, &maxs);
    Ok(FiniteSet::interval(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::grid::Grid;

    fn set(points: &[f64]) -> FiniteSet {
        FiniteSet::new(points.to_vec()).unwrap()
    }

    #[test]
    fn construction_sorts_dedups_and_validates() {
        let s = set(&[2.0, -1.0, 2.0, 0.5]);
        assert_eq!(s.points(), &[-1.0, 0.5, 2.0]);
        assert_eq!(FiniteSet::new(vec![]), Err(SetError::Empty));
        assert_eq!(FiniteSet::new(vec![f64::NAN]), Err(SetError::NonFinite));
        let too_many: Vec<f64> = (0..=MAX_SET_POINTS).map(|i| i as f64).collect();
        assert!(matches!(
            FiniteSet::new(too_many),
            Err(SetError::TooLarge { what: "point set", len: 65, cap: 64 })
        ));
    }

    #[test]
    fn hull_collapses_to_endpoints() {
        assert_eq!(set(&[0.0, 0.25, 1.0]).hull(), set(&[0.0, 1.0]));
        assert_eq!(FiniteSet::singleton(3.0).hull(), FiniteSet::singleton(3.0));
    }

    #[test]
    fn hausdorff_matches_a_two_pointer_oracle() {
        // Independent oracle: for sorted point lists, the nearest neighbour
        // of each point can be found by a linear merge instead of the
        // quadratic double scan used by the implementation.
        fn directed_oracle(from: &FiniteSet, to: &FiniteSet) -> f64 {
            let mut worst = 0.0f64;
            let mut j = 0usize;
            for &p in from.points() {
                while j + 1 < to.len() && to.points()[j + 1] < p {
                    j += 1;
                }
                let mut nearest = (p - to.points()[j]).abs();
                if j + 1 < to.len() {
                    nearest = nearest.min((p - to.points()[j + 1]).abs());
                }
                worst = worst.max(nearest);
            }
            worst
        }
        let a = set(&[0.0, 1.0, 2.5]);
        let b = set(&[0.5, 2.0]);
        let oracle = directed_oracle(&a, &b).max(directed_oracle(&b, &a));
        assert_eq!(hausdorff(&a, &b), oracle);
        assert_eq!(hausdorff(&a, &b), 0.5);

        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let n = rng.gen_range(1..=8);
            let m = rng.gen_range(1..=8);
            let a = set(&(0..n).map(|_| rng.gen_range(-4.0..4.0)).collect::<Vec<_>>());
            let b = set(&(0..m).map(|_| rng.gen_range(-4.0..4.0)).collect::<Vec<_>>());
            let oracle = directed_oracle(&a, &b).max(directed_oracle(&b, &a));
            assert_eq!(hausdorff(&a, &b), oracle, "a={a} b={b}");
        }
    }

    #[test]
    fn hausdorff_vanishes_on_equal_sets() {
        let s = set(&[-1.0, 0.0, 0.5]);
        assert_eq!(hausdorff(&s, &s), 0.0);
    }

    #[test]
    fn singleton_valued_functions_integrate_to_singleton_intervals() {
        let grid = Grid::uniform(-1.0, 1.0, 65).unwrap().into_shared();
        let f = SampledFunction::new(grid.clone(), |_: &f64| FiniteSet::singleton(0.75));
        let out = minkowski_riemann_integral(&f, &grid).unwrap();
        assert_eq!(out, FiniteSet::singleton(0.75));
    }

    #[test]
    fn sign_envelope_integrates_to_the_centered_interval() {
        // F(τ) = {−|τ|, |τ|}: envelope endpoints ∓|τ|, halved integrals ∓1/2.
        let grid = Grid::uniform(-1.0, 1.0, 65).unwrap().into_shared();
        let f = SampledFunction::new(grid.clone(), |t: &f64| {
            FiniteSet::new(vec![-t.abs(), t.abs()]).unwrap()
        });
        let out = minkowski_riemann_integral(&f, &grid).unwrap();
        assert_eq!(out, FiniteSet::interval(-0.5, 0.5));
    }

    #[test]
    fn two_point_constant_integrates_to_the_scaled_interval() {
        let grid = Grid::uniform(-1.0, 1.0, 33).unwrap().into_shared();
        let f = SampledFunction::new(grid.clone(), |_: &f64| FiniteSet::new(vec![0.0, 1.0]).unwrap());
        let out = minkowski_riemann_integral(&f, &grid).unwrap();
        assert_eq!(out, FiniteSet::interval(0.0, 1.0));
    }

    #[test]
    fn integration_rejects_oversized_grids() {
        let grid = Grid::uniform(-1.0, 1.0, 257).unwrap().into_shared();
        let f = SampledFunction::new(grid.clone(), |_: &f64| FiniteSet::singleton(0.0));
        assert!(matches!(
            minkowski_riemann_integral(&f, &grid),
            Err(SetError::TooLarge { what: "integration grid", len: 257, cap: 129 })
        ));
    }
}
