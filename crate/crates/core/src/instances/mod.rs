//! Fully wired instantiations of the bound machinery, plus the
//! quadrature and set-arithmetic they need.
//!
//! Four instances ship:
//!
//! * **scalar** — averaging on the line; reproduces the classical bound
//!   (1 + t²)/2 with extremal |τ − t|.
//! * **vector** — averaging into ℝᵏ along a fixed unit direction.
//! * **pair** — two scalar channels with a componentwise value monoid
//!   ℝ₊², exercising genuinely partial order.
//! * **setvalued** — finite subsets of ℝ under Hausdorff distance, with
//!   an interval-valued integral and the convex-hull projector.
//!
//! Each builder returns a [`builders::WiredInstance`]: the operator
//! bundle plus every distance, monoid and gauge the audits need, all
//! sharing one grid so quadrature identities hold bit for bit.

pub mod builders;
pub mod generators;
pub mod grid;
pub mod sets;

pub use builders::{
    build_pair_instance, build_scalar_instance, build_setvalued_instance, build_vector_instance,
    default_grid, InstanceError, WiredInstance,
};
pub use grid::{trapezoid, trapezoid_integral, Grid, GridError};
pub use sets::{
    hausdorff, minkowski_riemann_integral, FiniteSet, SetError, MAX_INTEGRATION_NODES,
    MAX_SET_POINTS,
};
