//! Exact enumeration of quarter-plane walks with small steps.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, dense univariate polynomials, resultants,
//!   cyclotomic tests and arithmetic modulo a polynomial.
//! * [`series`]: Laurent polynomials in one and two variables, univariate
//!   rational functions and truncated power series in `t`.
//! * [`stepset`]: step sets, the symmetries of the square and the reduction
//!   of the 256 step sets to 79 models.
//! * [`group`]: the birational involutions attached to a step set and the
//!   orbit of `(x, y)`.
//! * [`prover`]: certificates for finite and infinite groups.
//! * [`kernel`]: roots of the kernel, expansion of `1/K` and the canonical
//!   factorisation of the discriminant.
//! * [`counter`]: the counting oracle, identity checks, orbit-sum extraction
//!   and closed forms.
//! * [`algebraic`]: the three models solved through half-orbit sums.
//!
//! Data-parallel sweeps go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

pub mod algebra;
pub mod algebraic;
pub mod counter;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod kernel;
pub mod par;
pub mod prover;
pub mod series;
pub mod stepset;
pub mod suites;

pub use error::{Error, Result};
