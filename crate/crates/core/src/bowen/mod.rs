//! Hausdorff dimension of Gauss–Cantor sets from periodic orbits.
//!
//! The trace of `ℒ_sⁿ` is a finite sum over the fixed points of `ψⁿ`; the
//! Fredholm determinant `det(Id - ℒ_s)` is expanded from those traces and
//! truncated at order `M`, and its root in `(0, 1)` approximates the
//! dimension. Fixed points and multipliers are exact surds; only the trace
//! sums are rounded.

mod orbit;
mod solve;
mod trace;

pub use orbit::{enumerate_periodic, multiplier, PeriodicOrbit};
pub use solve::{solve_dimension, solve_system, solve_table, DimensionReport, RESIDUAL_TOL_BITS, ROOT_BRACKET};
pub use trace::{
    fredholm_coefficients, orbit_counts, trace, truncated_determinant, OrbitClass, PreparedTraces, Scalar, TraceTable,
};
