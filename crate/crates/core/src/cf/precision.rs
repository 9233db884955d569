use std::cmp::Ordering;
use std::fmt;

use dashu::base::Sign;
use dashu::float::round::mode::{Down, HalfEven, Up};
use dashu::float::FBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

/// Binary high-precision float used for transcendental work.
pub type Float = FBig<HalfEven>;

pub const DEFAULT_BITS: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    #[default]
    Nearest,
    Downward,
    Upward,
}

/// Mantissa size and rounding direction for float outputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionContext {
    pub bits: usize,
    pub rounding: Rounding,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            bits: DEFAULT_BITS,
            rounding: Rounding::Nearest,
        }
    }
}

impl PrecisionContext {
    pub fn new(bits: usize) -> Self {
        PrecisionContext {
            bits,
            ..Default::default()
        }
    }

    pub fn with_rounding(self, rounding: Rounding) -> Self {
        PrecisionContext { rounding, ..self }
    }

    /// Relative error bound `2^(1 - bits)` of a single rounding.
    pub fn relative_radius(&self) -> RBig {
        pow2(1 - self.bits as isize)
    }

    /// Rounds an exact rational to a float in the configured direction.
    pub fn round(&self, x: &RBig) -> Float {
        match self.rounding {
            Rounding::Nearest => x.to_float::<HalfEven, 2>(self.bits).value(),
            Rounding::Downward => x.to_float::<Down, 2>(self.bits).value().with_rounding(),
            Rounding::Upward => x.to_float::<Up, 2>(self.bits).value().with_rounding(),
        }
    }

    pub fn float(&self, x: i64) -> Float {
        Float::from(x).with_precision(self.bits).value()
    }
}

/// `2^e` as an exact rational.
pub fn pow2(e: isize) -> RBig {
    if e >= 0 {
        RBig::from(UBig::ONE << e as usize)
    } else {
        RBig::from_parts(IBig::ONE, UBig::ONE << (-e) as usize)
    }
}

/// Exact rational value of a binary float.
pub fn float_to_rational<R: dashu::float::round::Round>(x: &FBig<R, 2>) -> RBig {
    let repr = x.repr();
    let sig = RBig::from(repr.significand().clone());
    sig * pow2(repr.exponent())
}

/// A closed rational interval `[lo, hi]` certified to contain a real value.
///
/// This is the value-plus-radius currency of the crate: `midpoint()` is the
/// reported value and `radius()` its error bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: RBig,
    pub hi: RBig,
}

impl Enclosure {
    pub fn new(lo: RBig, hi: RBig) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        Enclosure { lo, hi }
    }

    pub fn point(x: RBig) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> RBig {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> RBig {
        (&self.lo + &self.hi) / RBig::from(2u8)
    }

    pub fn radius(&self) -> RBig {
        self.width() / RBig::from(2u8)
    }

    pub fn contains(&self, x: &RBig) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Certified comparison: `Some` only when the enclosures are disjoint or
    /// both are the same point.
    pub fn certain_cmp(&self, other: &Enclosure) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if other.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Enclosure of `max(x, y)` for `x ∈ self`, `y ∈ other`.
    pub fn max(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn widen(&self, r: &RBig) -> Enclosure {
        Enclosure {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    /// Replaces the endpoints by `bits`-bit binary floats rounded outward,
    /// keeping rational sizes bounded.
    pub fn round_outward(&self, bits: usize) -> Enclosure {
        let lo = float_to_rational(&self.lo.to_float::<Down, 2>(bits).value());
        let hi = float_to_rational(&self.hi.to_float::<Up, 2>(bits).value());
        Enclosure { lo, hi }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().value()
    }

    pub fn to_float(&self, ctx: &PrecisionContext) -> Float {
        ctx.round(&self.midpoint())
    }

    /// Midpoint in decimal with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.midpoint(), digits)
    }
}

/// Decimal rendering of a rational with `digits` significant digits.
pub fn rational_to_decimal(x: &RBig, digits: usize) -> String {
    x.to_float::<HalfEven, 10>(digits.max(1)).value().to_string()
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.radius().to_f64().value();
        write!(f, "{} ± {:.1e}", self.to_decimal(24), r)
    }
}

/// Sign of an `IBig` as -1, 0, 1.
pub(crate) fn signum(x: &IBig) -> i8 {
    if *x == IBig::ZERO {
        0
    } else if x.sign() == Sign::Negative {
        -1
    } else {
        1
    }
}
