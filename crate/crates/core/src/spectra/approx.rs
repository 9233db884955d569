use std::fmt::Write as _;

use serde::Serialize;

use super::window::{height_at, merge, WindowSearch};
use crate::cf::{lagrange_value, Digit, EventuallyPeriodicSeq, PrecisionContext, QuadraticSurd};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::par;

/// Inputs of [`approximate_spectra`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxParams {
    pub lo: f64,
    pub hi: f64,
    /// Resolution: every outer piece is at most `1/q` wide.
    pub q: u64,
    /// Largest digit allowed; must be at least `hi - 1`.
    pub alphabet: Digit,
    /// Longest period tried for inner points; derived from the budget if unset.
    pub period_bound: Option<usize>,
    /// Cap on search nodes for the outer windows.
    pub budget: u128,
    /// Cap on candidate periodic words for the inner set.
    pub inner_budget: u128,
    /// Cover only sequences with digits `≤ alphabet`, even when the range
    /// reaches values that larger digits could produce.
    pub restricted: bool,
}

impl ApproxParams {
    pub fn new(lo: f64, hi: f64, q: u64, alphabet: Digit) -> Self {
        ApproxParams {
            lo,
            hi,
            q,
            alphabet,
            period_bound: None,
            budget: 1 << 26,
            inner_budget: 1 << 18,
            restricted: false,
        }
    }
}

/// A point of `L ∩ M` realised by a purely periodic sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerPoint {
    /// Lyndon representative of the period.
    pub word: Vec<Digit>,
    pub exact: QuadraticSurd,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct SpectrumApproximation {
    pub params: ApproxParams,
    /// Window radius `N`.
    pub radius: usize,
    pub period_bound: usize,
    /// Sorted disjoint intervals covering `M ∩ [lo, hi]`.
    pub outer: Vec<Interval>,
    /// Widest single window piece before merging.
    pub max_piece_width: f64,
    pub pieces: usize,
    pub nodes: u128,
    /// Increasing by value.
    pub inner: Vec<InnerPoint>,
}

pub const CSV_HEADER: &str = "kind,lo,hi,word";

impl SpectrumApproximation {
    pub fn outer_contains(&self, x: f64) -> bool {
        self.outer.iter().any(|i| i.contains(x))
    }

    /// `outer` rows then `inner` rows; floats in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for i in &self.outer {
            let _ = writeln!(s, "outer,{:e},{:e},", i.lo, i.hi);
        }
        for p in &self.inner {
            let word: Vec<String> = p.word.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "inner,{:e},{:e},{}", p.value, p.value, word.join(" "));
        }
        s
    }
}

/// Smallest `N` with `2^-(N-3) < 1/(2Q)`.
pub fn window_radius(q: u64) -> usize {
    let mut n: i32 = 3;
    while 2f64.powi(3 - n) >= 0.5 / q as f64 {
        n += 1;
    }
    n as usize
}

/// Longest period whose unpruned candidate count `Σ Aⁿ` fits the budget.
fn period_from_budget(alphabet: Digit, budget: u128, cap: usize) -> usize {
    let mut total = 0u128;
    let mut p = 0;
    while p < cap {
        let next = (alphabet as u128).saturating_pow(p as u32 + 1);
        if total.saturating_add(next) > budget {
            break;
        }
        total += next;
        p += 1;
    }
    p.max(1)
}

/// `max_j f` over one period of `…www…`, as an outward-rounded interval.
fn periodic_height(word: &[Digit]) -> Interval {
    let reps = 64 / word.len() + 2;
    let long: Vec<Digit> = word.iter().copied().cycle().take(word.len() * (2 * reps + 1)).collect();
    let base = word.len() * reps;
    let a = *word.iter().max().expect("nonempty");
    (0..word.len())
        .map(|j| height_at(&long, base + j, a))
        .reduce(|x, y| Interval::new(x.lo.max(y.lo), x.hi.max(y.hi)))
        .expect("nonempty")
}

/// Lyndon words of length `≤ max_len` over `1..=a`, skipping any word that
/// already contains a factor certainly above `hi`.
fn lyndon_candidates(a: Digit, max_len: usize, hi: f64) -> Vec<Vec<Digit>> {
    fn rec(w: &mut Vec<Digit>, p: usize, a: Digit, max_len: usize, hi: f64, out: &mut Vec<Vec<Digit>>) {
        let t = w.len();
        if t > 0 {
            let j = t - 1;
            if w[j] as f64 + 2.0 > hi && height_at(w, j, a).lo > hi {
                return;
            }
            // earlier positions only gained information; recheck them
            if (0..j).any(|i| w[i] as f64 + 2.0 > hi && height_at(w, i, a).lo > hi) {
                return;
            }
            if p == t {
                out.push(w.clone());
            }
        }
        if t == max_len {
            return;
        }
        let start = if t == 0 { 1 } else { w[t - p] };
        for d in start..=a {
            w.push(d);
            let np = if t == 0 || d == w[t - p] { p.max(1) } else { t + 1 };
            rec(w, np, a, max_len, hi, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 1, a, max_len, hi, &mut out);
    out
}

/// Certified outer cover of `M ∩ [lo, hi]` and exact inner points of `L ∩ M`.
pub fn approximate_spectra(params: &ApproxParams) -> Result<SpectrumApproximation> {
    let ApproxParams {
        lo, hi, q, alphabet, ..
    } = *params;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidArgument(format!("bad range [{lo}, {hi}]")));
    }
    if q == 0 || alphabet == 0 {
        return Err(Error::InvalidArgument(
            "Q and the alphabet bound must be positive".into(),
        ));
    }
    // a digit never exceeds the height at its own position
    if hi > alphabet as f64 + 1.0 && !params.restricted {
        return Err(Error::InvalidArgument(format!(
            "range reaches {hi}, which needs digits up to {}, above the bound {alphabet}",
            hi.floor()
        )));
    }
    let radius = window_radius(q);
    let search = WindowSearch {
        lo,
        hi,
        alphabet,
        radius,
        budget: params.budget,
    };
    let (pieces, nodes) = search.run()?;
    let max_piece_width = pieces.iter().map(|p| p.width()).fold(0.0, f64::max);
    let piece_count = pieces.len();
    let outer = merge(pieces);

    let period_bound = params
        .period_bound
        .unwrap_or_else(|| period_from_budget(alphabet, params.inner_budget, 2 * radius + 2));
    let words = lyndon_candidates(alphabet, period_bound, hi);
    let ctx = PrecisionContext::new(128);
    let inner: Result<Vec<Option<InnerPoint>>> = par::map(&words, |w| {
        let h = periodic_height(w);
        if h.hi < lo || h.lo > hi {
            return Ok(None);
        }
        let v = lagrange_value(&EventuallyPeriodicSeq::periodic(w.clone())?, &ctx)?;
        let exact = v.exact.clone().expect("periodic values are surds");
        let value = v.to_f64();
        Ok((lo..=hi).contains(&value).then(|| InnerPoint {
            word: w.clone(),
            exact,
            value,
        }))
    })
    .into_iter()
    .collect();
    let mut inner: Vec<InnerPoint> = inner?.into_iter().flatten().collect();
    inner.sort_by(|x, y| x.exact.cmp(&y.exact).then(x.word.cmp(&y.word)));
    Ok(SpectrumApproximation {
        params: params.clone(),
        radius,
        period_bound,
        outer,
        max_piece_width,
        pieces: piece_count,
        nodes,
        inner,
    })
}

/// Maximal open subintervals of `[lo, hi]` missed by the outer cover.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport {
    pub lo: f64,
    pub hi: f64,
    pub gaps: Vec<(f64, f64)>,
}

impl GapReport {
    pub fn contains_gap(&self, a: f64, b: f64) -> bool {
        self.gaps.iter().any(|&(x, y)| x <= a && b <= y)
    }
}

pub fn detect_gaps(approx: &SpectrumApproximation, lo: f64, hi: f64) -> GapReport {
    let mut gaps = Vec::new();
    let mut cursor = lo;
    for i in &approx.outer {
        if i.hi < lo || i.lo > hi {
            continue;
        }
        if i.lo > cursor {
            gaps.push((cursor, i.lo));
        }
        cursor = cursor.max(i.hi);
    }
    if cursor < hi {
        gaps.push((cursor, hi));
    }
    GapReport { lo, hi, gaps }
}
