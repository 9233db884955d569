//! Gauss–Cantor sets `K(γ, B)`: cylinder covers, covering dimension bounds,
//! arithmetic sums and the gap-exponent inequality.

mod bounds;
mod cylinder;
mod gap;
mod sum;
mod wordset;

pub use bounds::{palis_takens_bounds, CantorSystem, DimBounds, BISECTION_TOL};
pub(crate) use cylinder::{block_sequences, level_count};
pub use cylinder::{
    cover, cylinder_interval, euler_denominator_check, CylinderInterval, EulerCheck, GaussCantorSpec, CSV_HEADER,
    DEFAULT_BUDGET,
};
pub use gap::{gap_exponent_check, GapExponentReport};
pub use sum::{sum_cover, SumCover};
pub use wordset::{transpose, WordSet};
