//! Continued fractions, quadratic surds and Perron's height function.

mod convergent;
mod height;
mod periodic;
mod precision;
mod sequence;
mod surd;
mod word;

pub use convergent::{convergents, denominators_u128, Convergent, Mobius};
pub use height::{lagrange_value, markov_value, perron_height, PerronValue, SpectrumValue};
pub use periodic::{apply_mobius, eval_periodic, purely_periodic_value};
pub use precision::{
    float_to_rational, pow2, rational_to_decimal, Enclosure, Float, PrecisionContext, Rounding, DEFAULT_BITS,
};
pub use sequence::EventuallyPeriodicSeq;
pub use surd::QuadraticSurd;
pub use word::{expand_rational, expand_rational_big, Digit, PeriodicWord, Word};
