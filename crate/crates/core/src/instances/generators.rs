//! Seeded random members of the unit-Lipschitz classes used by the
//! instances: piecewise-linear profiles with slopes kept strictly below
//! one, so membership survives floating-point evaluation with no slack.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::distance::{fixtures, Tier};
use crate::instances::sets::FiniteSet;
use crate::lipschitz::{check_class_membership, identity_modulus, SampledFunction};
use crate::sample::{dyadic_real, stream_seed};

/// Number of linear segments in every generated profile. The default
/// grids (257 and 65 nodes on [−1, 1]) subdivide each segment evenly,
/// so every kink lands on a grid node.
const CONTROL_SEGMENTS: usize = 32;

/// Slopes are drawn from [−1, 1] and then shrunk by this factor, leaving
/// headroom that dwarfs any rounding in evaluation or distance formulas.
const SLOPE_MARGIN: f64 = 1.0 - 1e-6;

/// Largest number of branches in a generated set-valued member.
pub const MAX_BRANCHES: usize = 8;

const RETRY_LIMIT: usize = 16;

/// A continuous piecewise-linear profile on [start, start + 32·step].
#[derive(Clone)]
struct Profile {
    start: f64,
    step: f64,
    anchors: Vec<f64>,
    slopes: Vec<f64>,
}

impl Profile {
    fn random(rng: &mut ChaCha8Rng, start: f64, end: f64, slope_cap: f64) -> Profile {
        let step = (end - start) / CONTROL_SEGMENTS as f64;
        let slopes: Vec<f64> =
            (0..CONTROL_SEGMENTS).map(|_| rng.gen_range(-1.0..=1.0) * slope_cap).collect();
        let mut anchors = Vec::with_capacity(CONTROL_SEGMENTS + 1);
        anchors.push(dyadic_real(rng) / 2.0);
        for slope in &slopes {
            let last = *anchors.last().expect("anchors start non-empty");
            anchors.push(last + slope * step);
        }
        Profile { start, step, anchors, slopes }
    }

    fn eval(&self, t: f64) -> f64 {
        let raw = ((t - self.start) / self.step).floor();
        let idx = (raw as isize).clamp(0, CONTROL_SEGMENTS as isize - 1) as usize;
        let node = self.start + idx as f64 * self.step;
        self.anchors[idx] + self.slopes[idx] * (t - node)
    }
}

fn span(grid: &[f64]) -> (f64, f64) {
    assert!(grid.len() >= 2, "a profile needs a grid with at least two nodes");
    (grid[0], grid[grid.len() - 1])
}

/// A random real-valued unit-Lipschitz member, deterministic in `seed`.
pub fn lipschitz_scalar(seed: u64, grid: Arc<Vec<f64>>) -> SampledFunction<f64, f64> {
    let (start, end) = span(&grid);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let profile = Profile::random(&mut rng, start, end, SLOPE_MARGIN);
    SampledFunction::new(grid, move |t: &f64| profile.eval(*t))
}

/// A random vector-valued member that is unit-Lipschitz into Euclidean
/// `dim`-space: per-component slopes are scaled by 1/√dim so each
/// segment's slope vector has Euclidean norm below one.
pub fn lipschitz_vector(seed: u64, grid: Arc<Vec<f64>>, dim: usize) -> SampledFunction<f64, Vec<f64>> {
    assert!(dim >= 1, "dimension must be positive");
    let (start, end) = span(&grid);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = SLOPE_MARGIN / (dim as f64).sqrt();
    let profiles: Vec<Profile> =
        (0..dim).map(|_| Profile::random(&mut rng, start, end, cap)).collect();
    SampledFunction::new(grid, move |t: &f64| profiles.iter().map(|p| p.eval(*t)).collect())
}

/// A random member for the two-channel instance: each channel is
/// independently unit-Lipschitz, matching the componentwise distances.
pub fn lipschitz_pair(seed: u64, grid: Arc<Vec<f64>>) -> SampledFunction<f64, Vec<f64>> {
    let (start, end) = span(&grid);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let profiles: Vec<Profile> =
        (0..2).map(|_| Profile::random(&mut rng, start, end, SLOPE_MARGIN)).collect();
    SampledFunction::new(grid, move |t: &f64| profiles.iter().map(|p| p.eval(*t)).collect())
}

fn sets_candidate(seed: u64, grid: Arc<Vec<f64>>) -> SampledFunction<f64, FiniteSet> {
    let (start, end) = span(&grid);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let branches = rng.gen_range(1..=MAX_BRANCHES);
    let profiles: Vec<Profile> =
        (0..branches).map(|_| Profile::random(&mut rng, start, end, SLOPE_MARGIN)).collect();
    SampledFunction::new(grid, move |t: &f64| {
        FiniteSet::new(profiles.iter().map(|p| p.eval(*t)).collect())
            .expect("at least one branch value")
    })
}

/// A random set-valued member: up to [`MAX_BRANCHES`] unit-Lipschitz
/// branches, whose pointwise value set is automatically unit-Lipschitz
/// in Hausdorff distance. The candidate is still verified on every grid
/// pair with zero slack; on the rare failure a fresh seed is derived.
pub fn lipschitz_sets(seed: u64, grid: Arc<Vec<f64>>) -> SampledFunction<f64, FiniteSet> {
    let dt = fixtures::absdiff_line(Tier::PseudoMetric);
    let dx = fixtures::hausdorff_sets();
    let w = identity_modulus();
    for attempt in 0..RETRY_LIMIT {
        let attempt_seed =
            if attempt == 0 { seed } else { stream_seed(seed, &format!("set-retry-{attempt}")) };
        let f = sets_candidate(attempt_seed, Arc::clone(&grid));
        if check_class_membership(&f, &dt, &dx, &w, &0.0).passed() {
            return f;
        }
    }
    panic!("no admissible set-valued member within {RETRY_LIMIT} attempts from seed {seed}");
}
