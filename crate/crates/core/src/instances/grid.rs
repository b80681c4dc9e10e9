//! Verification grids on a real interval and the trapezoid rule over them.
//!
//! Grids are strictly increasing node lists spanning a declared interval.
//! Breakpoints (evaluation points t, kink locations of piecewise-linear
//! integrands) are registered into the grid so that the trapezoid rule is
//! exact up to rounding for the piecewise-linear functions the sharp-bound
//! machinery feeds it. The default grids are dyadic (257 or 65 nodes on
//! [−1, 1]) so node arithmetic stays exact as well.

use std::sync::Arc;

use crate::lipschitz::SampledFunction;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GridError {
    #[error("a grid needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("grid interval is empty or reversed: [{0}, {1}]")]
    BadInterval(f64, f64),
    #[error("grid endpoints must be finite")]
    NonFinite,
}

/// Sorted, strictly increasing node list spanning `[first, last]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nodes: Vec<f64>,
}

impl Grid {
    /// `n` uniformly spaced nodes on `[a, b]`, endpoints exact.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Grid, GridError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GridError::NonFinite);
        }
        if n < 2 {
            return Err(GridError::TooFewNodes(n));
        }
        if a >= b {
            return Err(GridError::BadInterval(a, b));
        }
        let steps = (n - 1) as f64;
        let mut nodes: Vec<f64> = (0..n).map(|i| a + (b - a) * (i as f64) / steps).collect();
        nodes[0] = a;
        nodes[n - 1] = b;
        Ok(Grid { nodes })
    }

    /// Register extra nodes. Points outside the open interval or already
    /// present (bit-exact) are ignored; the result stays strictly
    /// increasing.
    pub fn with_breakpoints(mut self, points: &[f64]) -> Grid {
        let (a, b) = (self.first(), self.last());
        for &p in points {
            if p.is_finite() && p > a && p < b {
                self.nodes.push(p);
            }
        }
        self.nodes.sort_by(|x, y| x.partial_cmp(y).expect("grid nodes are finite"));
        self.nodes.dedup();
        self
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least 2 nodes
    }

    pub fn first(&self) -> f64 {
        self.nodes[0]
    }

    pub fn last(&self) -> f64 {
        *self.nodes.last().expect("grid is non-empty")
    }

    /// Hand the node list to functions that share it.
    pub fn into_shared(self) -> Arc<Vec<f64>> {
        Arc::new(self.nodes)
    }
}

/// Composite trapezoid rule over explicit nodes. Exact to rounding for
/// piecewise-linear integrands whose kinks all lie on nodes.
pub fn trapezoid(nodes: &[f64], values: &[f64]) -> f64 {
    assert_eq!(nodes.len(), values.len(), "one value per node");
    let mut acc = 0.0;
    for i in 1..nodes.len() {
        acc += (nodes[i] - nodes[i - 1]) * (values[i - 1] + values[i]) * 0.5;
    }
    acc
}

/// Trapezoid rule over a sampled function's own grid.
pub fn trapezoid_integral(g: &SampledFunction<f64, f64>) -> f64 {
    let nodes = g.grid();
    let values: Vec<f64> = nodes.iter().map(|t| g.eval(t)).collect();
    trapezoid(nodes, &values)
}
