//! Approximations of the Lagrange and Markov spectra: certified outer covers
//! from finite windows, exact inner points from periodic words, gaps, Hall
//! ray realisations and named constants.

mod approx;
mod constants;
mod hall;
mod plot;
mod window;

pub use approx::{
    approximate_spectra, detect_gaps, window_radius, ApproxParams, GapReport, InnerPoint, SpectrumApproximation,
    CSV_HEADER,
};
pub use constants::{constants, NamedConstants};
pub use hall::{hall_realize, HallRealization};
pub use plot::strip_svg;
pub use window::cylinder_markov_bounds;
