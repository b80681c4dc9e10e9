//! Distances valued in a partially ordered monoid, and sharp Ostrowski-type
//! bounds for monotone operators over them.
//!
//! The classical Ostrowski inequality bounds how far a function's mean can
//! drift from a point value: |½∫f − f(x)| ≤ (1+x²)/2 for 1-Lipschitz f on
//! [−1,1], with the extremal f_x(τ) = |τ−x| attaining it. This crate carries
//! that statement to an abstract setting where every distance takes values in
//! a partially ordered monoid `M` instead of ℝ₊:
//!
//! * [`order`] — the carrier: partial order, smallest element θ, monotone
//!   addition, partial suprema, and sample-based axiom audits.
//! * [`distance`] — M-valued distances with a declared strength tier, the
//!   agreement condition replacing the triangle inequality, the e-function
//!   metric construction, and two executable counterexamples.
//! * [`lipschitz`] — moduli of continuity, Lipschitz-class membership over a
//!   verification grid, composition and section closure, transformed
//!   distances ω∘h.
//! * [`engine`] — the operator bundle (Λ, λ, φ_X, φ_Y, optional P), its
//!   audits, the sharp bound λ(h_T(·,t)), extremal functions, and the
//!   convexified variant h_X(Λf, Pf(t)) ≤ λ(h_T(·,t)).
//! * [`instances`] — four fully wired instantiations (scalar, vector, pair,
//!   set-valued) with the quadrature and set-arithmetic they need.
//! * [`harness`] — configuration, audit orchestration, CSV/Markdown reports,
//!   and the exit-code contract behind the `ostrowski` binary.
//!
//! Verification is sample-based throughout: axioms are checked on finite
//! seeded samples and failures carry the first witness tuple, so a broken
//! structure names the element pair or triple that broke it.

pub mod distance;
pub mod engine;
pub mod harness;
pub mod instances;
pub mod lipschitz;
pub mod order;
pub mod report;
pub mod sample;

pub use distance::{DistanceSpace, EFunction, Tier};
pub use engine::{BoundReport, MetricGauge, OperatorQuadruple};
pub use harness::{RunConfig, RunReport};
pub use instances::{FiniteSet, Grid};
pub use lipschitz::{ModulusOfContinuity, SampledFunction};
pub use order::OrderedMonoid;
pub use report::{AxiomReport, CheckOutcome, Witness};
pub use sample::Sample;
