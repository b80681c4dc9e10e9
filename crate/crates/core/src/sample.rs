//! Finite seeded samples and deterministic tuple scanning.
//!
//! Every axiom suite runs over a [`Sample`]: a finite element list plus the
//! seed it was generated from. Suites scan pairs or triples of sample
//! elements; when the full cartesian product fits the tuple budget the scan
//! is exhaustive in lexicographic index order (so witness tuples are stable
//! and predictable), otherwise the budget is spent on seeded random index
//! tuples. Either way the same sample and budget always visit the same
//! tuples in the same order.
//!
//! Numeric samples default to a dyadic lattice (multiples of 2⁻²⁰) rather
//! than arbitrary reals. The suites compare with exact ≤, and on the lattice
//! every sum, difference and absolute value the suites evaluate is exact in
//! f64, so real-equality cases (a point between two others, a collinear
//! triple) stay equalities instead of rounding into one-ulp "violations".

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default number of tuples each law examines.
pub const DEFAULT_TUPLE_BUDGET: usize = 10_000;

/// Default seed for samples whose caller has no better one.
pub const DEFAULT_SEED: u64 = 42;

/// Lattice step for default numeric samples: 2⁻²⁰.
const DYADIC_STEP: f64 = 1.0 / (1 << 20) as f64;

/// A finite list of carrier elements with the seed that produced it.
#[derive(Debug, Clone)]
pub struct Sample<E> {
    pub elements: Vec<E>,
    pub seed: u64,
}

impl<E> Sample<E> {
    /// Wrap an explicit element list. The seed still steers tuple drawing
    /// if the list is large enough to make exhaustive scans too costly.
    pub fn from_elements(elements: Vec<E>, seed: u64) -> Self {
        assert!(!elements.is_empty(), "sample must be non-empty");
        Sample { elements, seed }
    }

    /// Generate `n` elements from a seeded generator.
    pub fn generate(seed: u64, n: usize, mut gen: impl FnMut(&mut ChaCha8Rng) -> E) -> Self {
        assert!(n > 0, "sample must be non-empty");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elements = (0..n).map(|_| gen(&mut rng)).collect();
        Sample { elements, seed }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl Sample<f64> {
    /// `n` non-negative dyadic-lattice reals in [0, 4].
    pub fn dyadic_nonneg(seed: u64, n: usize) -> Self {
        Sample::generate(seed, n, dyadic_nonneg)
    }

    /// `n` dyadic-lattice reals in [−2, 2], for point carriers that allow
    /// negative coordinates.
    pub fn dyadic_reals(seed: u64, n: usize) -> Self {
        Sample::generate(seed, n, dyadic_real)
    }
}

impl Sample<Vec<f64>> {
    /// `n` vectors of non-negative dyadic-lattice reals.
    pub fn dyadic_nonneg_vecs(seed: u64, n: usize, dim: usize) -> Self {
        Sample::generate(seed, n, |rng| (0..dim).map(|_| dyadic_nonneg(rng)).collect())
    }

    /// `n` vectors of dyadic-lattice reals allowing negative coordinates.
    pub fn dyadic_real_vecs(seed: u64, n: usize, dim: usize) -> Self {
        Sample::generate(seed, n, |rng| (0..dim).map(|_| dyadic_real(rng)).collect())
    }
}

/// One non-negative dyadic-lattice real in [0, 4]: k·2⁻²⁰ with k ≤ 2²².
pub fn dyadic_nonneg(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0..=(1u64 << 22)) as f64 * DYADIC_STEP
}

/// One dyadic-lattice real in [−2, 2].
pub fn dyadic_real(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-(1i64 << 21)..=(1i64 << 21)) as f64 * DYADIC_STEP
}

/// Derive a per-suite seed from a master seed and a suite label, so adding
/// or reordering suites never shifts another suite's random stream.
pub fn stream_seed(master: u64, label: &str) -> u64 {
    // FNV-1a over the label, then splitmix64 to spread the combined bits.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = master ^ h;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Visit pairs of sample elements: exhaustive in lexicographic index order
/// when |S|² fits the budget, else `budget` seeded random index pairs.
pub(crate) fn for_each_pair<E>(sample: &Sample<E>, budget: usize, mut visit: impl FnMut(&E, &E)) {
    let n = sample.len();
    if n.saturating_mul(n) <= budget {
        for a in &sample.elements {
            for b in &sample.elements {
                visit(a, b);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
        for _ in 0..budget {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            visit(&sample.elements[i], &sample.elements[j]);
        }
    }
}

/// Triple analogue of [`for_each_pair`].
pub(crate) fn for_each_triple<E>(
    sample: &Sample<E>,
    budget: usize,
    mut visit: impl FnMut(&E, &E, &E),
) {
    let n = sample.len();
    if n.saturating_mul(n).saturating_mul(n) <= budget {
        for a in &sample.elements {
            for b in &sample.elements {
                for c in &sample.elements {
                    visit(a, b, c);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
        for _ in 0..budget {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            visit(&sample.elements[i], &sample.elements[j], &sample.elements[k]);
        }
    }
}
