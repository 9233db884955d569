//! Perron's height function `f(x) = [x_0; x_1, …] + [0; x_{-1}, x_{-2}, …]`
//! and the Markov (`sup`) and Lagrange (`limsup`) values of eventually
//! periodic sequences.

use std::cmp::Ordering;

use dashu::rational::RBig;

use super::precision::{pow2, Enclosure, PrecisionContext};
use super::sequence::EventuallyPeriodicSeq;
use super::surd::QuadraticSurd;
use crate::error::Result;

/// `f(σ^shift x)`, kept as its two exact one-sided tails.
#[derive(Clone, Debug)]
pub struct PerronValue {
    pub shift: i64,
    pub right: QuadraticSurd,
    pub left: QuadraticSurd,
}

impl PerronValue {
    /// The height as a single surd, when both tails lie in one quadratic field.
    pub fn exact(&self) -> Option<QuadraticSurd> {
        self.right.add(&self.left).ok()
    }

    pub fn enclosure(&self, bits: usize) -> Enclosure {
        match self.exact() {
            Some(x) => x.enclosure(bits),
            None => self.right.enclosure(bits + 1).add(&self.left.enclosure(bits + 1)),
        }
    }
}

/// A certified spectrum value together with a shift realising it.
#[derive(Clone, Debug)]
pub struct SpectrumValue {
    /// Certified enclosure of the value; its radius is the error bound.
    pub value: Enclosure,
    /// The exact value, when it was identified as a single surd.
    pub exact: Option<QuadraticSurd>,
    /// A shift whose height is within `value.width()` of the value.
    pub shift: i64,
}

impl SpectrumValue {
    pub fn to_f64(&self) -> f64 {
        match &self.exact {
            Some(x) => x.to_f64(),
            None => self.value.to_f64(),
        }
    }
}

/// `f(σ^k s)` with both tails evaluated exactly.
pub fn perron_height(s: &EventuallyPeriodicSeq, k: i64) -> Result<PerronValue> {
    Ok(PerronValue {
        shift: k,
        right: s.right_tail(k).value()?,
        left: s.left_tail(k).value()?,
    })
}

/// Exact-when-possible comparison of two heights; falls back to enclosures,
/// treating overlapping enclosures at `bits` as equal.
fn cmp_heights(a: &PerronValue, b: &PerronValue, bits: usize) -> Ordering {
    if let (Some(x), Some(y)) = (a.exact(), b.exact()) {
        return x.cmp(&y);
    }
    let (ea, eb) = (a.enclosure(bits), b.enclosure(bits));
    ea.certain_cmp(&eb).unwrap_or(Ordering::Equal)
}

/// Maximum of `f` over one period of a two-sided periodic sequence.
fn periodic_max(period: &[u64], bits: usize) -> Result<SpectrumValue> {
    let s = EventuallyPeriodicSeq::periodic(period.to_vec())?;
    let mut best = perron_height(&s, 0)?;
    for k in 1..period.len() as i64 {
        let h = perron_height(&s, k)?;
        if cmp_heights(&h, &best, bits) == Ordering::Greater {
            best = h;
        }
    }
    Ok(SpectrumValue {
        value: best.enclosure(bits),
        exact: best.exact(),
        shift: best.shift,
    })
}

/// `limsup_{n→∞} f(σ^n s)`: the maximum of `f` along the periodic orbit of
/// the right period. The center and preperiods play no role.
pub fn lagrange_value(s: &EventuallyPeriodicSeq, ctx: &PrecisionContext) -> Result<SpectrumValue> {
    let mut v = periodic_max(s.right_period(), ctx.bits)?;
    v.shift += s.right_start();
    Ok(v)
}

/// `sup_{n∈ℤ} f(σ^n s)`.
///
/// Two-sided periodic sequences reduce to a maximum over one period, computed
/// exactly. Otherwise every shift touching the finite part is evaluated,
/// together with `J` periods on each side; shifts further out differ from the
/// periodic limit orbits by at most `2^-(J·period - 1)`, and `J` is doubled
/// until that tail can no longer change the answer beyond `2^-bits`.
pub fn markov_value(s: &EventuallyPeriodicSeq, ctx: &PrecisionContext) -> Result<SpectrumValue> {
    let bits = ctx.bits;
    if let Some(period) = s.two_sided_period() {
        return periodic_max(&period, bits);
    }
    let right_limit = periodic_max(s.right_period(), bits)?;
    let left_limit = periodic_max(s.transpose().right_period(), bits)?;
    let limit_hi = right_limit.value.hi.clone().max(left_limit.value.hi.clone());
    let limit_lo = right_limit.value.lo.clone().max(left_limit.value.lo.clone());

    let (nl, nr) = (s.left_period().len() as i64, s.right_period().len() as i64);
    let (mut lo_k, mut hi_k) = (s.left_end(), s.right_start());
    let mut heights = Vec::new();
    for k in lo_k..hi_k {
        let h = perron_height(s, k)?;
        let e = h.enclosure(bits);
        heights.push((h, e));
    }
    let mut periods = 1i64;
    loop {
        let (new_lo, new_hi) = (s.left_end() - periods * nl, s.right_start() + periods * nr);
        for k in (new_lo..lo_k).chain(hi_k..new_hi) {
            let h = perron_height(s, k)?;
            let e = h.enclosure(bits);
            heights.push((h, e));
        }
        (lo_k, hi_k) = (new_lo, new_hi);
        let agree = (periods * nl.min(nr)) as isize;
        let tail = pow2(1 - agree);
        let best_lo = heights.iter().map(|(_, e)| e.lo.clone()).max().expect("nonempty");
        let tail_hi = &limit_hi + &tail;
        if tail_hi < best_lo || agree > bits as isize + 2 {
            return Ok(finish(heights, best_lo, limit_lo, tail_hi, bits));
        }
        periods *= 2;
    }
}

fn finish(
    heights: Vec<(PerronValue, Enclosure)>,
    best_lo: RBig,
    limit_lo: RBig,
    tail_hi: RBig,
    bits: usize,
) -> SpectrumValue {
    let best_hi = heights.iter().map(|(_, e)| e.hi.clone()).max().expect("nonempty");
    let (winner, winner_enc) = heights
        .iter()
        .max_by(|a, b| a.1.midpoint().cmp(&b.1.midpoint()))
        .expect("nonempty");
    let lo = best_lo.max(limit_lo);
    let hi = best_hi.max(tail_hi.clone());
    // The winner is exact only if nothing else can beat it.
    let dominated = tail_hi < winner_enc.lo
        && heights
            .iter()
            .all(|(h, e)| e.hi < winner_enc.lo || cmp_heights(h, winner, bits) != Ordering::Greater);
    let exact = if dominated { winner.exact() } else { None };
    let value = match &exact {
        Some(x) => x.enclosure(bits),
        None => Enclosure::new(lo.clone().min(hi.clone()), hi),
    };
    SpectrumValue {
        value,
        exact,
        shift: winner.shift,
    }
}
