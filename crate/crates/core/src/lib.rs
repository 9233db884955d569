//! Exact and certified computations around the classical Lagrange and Markov
//! spectra.
//!
//! The crate is organised bottom-up:
//!
//! * [`cf`]: continued fractions, quadratic surds, bi-infinite eventually
//!   periodic sequences and Perron's height function.
//! * [`markov`]: Markov triples, the Markov tree, descent, counting and the
//!   mod-p Markov graphs.
//! * [`cantor`]: Gauss–Cantor sets, cylinder covers, covering dimension
//!   bounds, arithmetic sums and the gap-exponent inequality.
//! * [`bowen`]: Hausdorff dimension through periodic-orbit traces of the
//!   transfer operator and truncated Fredholm determinants.
//! * [`spectra`]: certified inner/outer approximations of the spectra, gap
//!   detection, Hall-ray realisations and named constants.
//!
//! Heavy enumerations go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

pub mod bowen;
pub mod cantor;
pub mod cf;
pub mod error;
pub mod interval;
pub mod markov;
pub mod par;
pub mod spectra;

pub use error::{Error, Result};
