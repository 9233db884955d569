//! Outward-rounded `f64` intervals for the hot loops of window enumeration.
//!
//! Every arithmetic result is widened by one ulp on each side, which covers
//! the at-most-half-ulp error of the round-to-nearest operation.

use std::ops::{Add, Div};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `1 / (a + self)` for a positive integer digit `a` and `self ⊆ [0, ∞)`.
    pub fn cf_step(self, a: u64) -> Interval {
        Interval::point(1.0) / (Interval::point(a as f64) + self)
    }

    pub fn hull(self, other: Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        Interval::new((self.lo + rhs.lo).next_down(), (self.hi + rhs.hi).next_up())
    }
}

impl Div for Interval {
    type Output = Interval;

    /// Division by an interval of positive numbers only.
    fn div(self, rhs: Interval) -> Interval {
        assert!(rhs.lo > 0.0, "division by an interval containing zero");
        let c = [self.lo / rhs.lo, self.lo / rhs.hi, self.hi / rhs.lo, self.hi / rhs.hi];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new(lo.next_down(), hi.next_up())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tail_is_enclosed() {
        // [0; 1, 1, ..., 1, y] with y in [0, 1] brackets (sqrt5 - 1)/2
        let mut x = Interval::new(0.0, 1.0);
        for _ in 0..60 {
            x = x.cf_step(1);
        }
        let g = (5f64.sqrt() - 1.0) / 2.0;
        assert!(x.contains(g));
        assert!(x.width() < 1e-14);
    }

    #[test]
    fn sums_are_outward() {
        let x = Interval::point(0.1) + Interval::point(0.2);
        assert!(x.lo < 0.30000000000000004 && x.hi > 0.3);
    }
}
