use serde::Serialize;

use super::trace::{truncated_determinant, PreparedTraces, TraceTable};
use crate::cantor::{CantorSystem, WordSet, DEFAULT_BUDGET};
use crate::cf::{float_to_rational, pow2, rational_to_decimal, Float};
use crate::error::{Error, Result};

/// Search interval for the root, validated on every call.
pub const ROOT_BRACKET: (f64, f64) = (1e-3, 1.0 - 1e-3);

/// Largest root residual accepted before the precision is doubled.
pub const RESIDUAL_TOL_BITS: isize = 128;

const MAX_BITS: usize = 4096;

/// The root `s_M` of `1 + Σ_{n ≤ M} dₙ(s)` together with the lower-order
/// roots, which serve as an empirical convergence check.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub order: usize,
    /// Precision actually used (after any automatic doubling).
    pub bits: usize,
    /// `s_M` in decimal.
    pub s_m: String,
    /// Decimal digits on which `s_M` and `s_{M-1}` agree.
    pub digits: usize,
    /// `|1 + Σ dₙ(s_M)|`.
    pub residual: f64,
    /// `|s_M - s_{M-1}|`.
    pub delta: Option<f64>,
    /// Number of fixed points of `ψⁿ` for `n = 1..=M`.
    pub orbit_counts: Vec<u128>,
    /// `(m, |s_m - s_{m-1}|)` for every order with a root.
    pub deltas: Vec<(usize, f64)>,
    #[serde(skip)]
    pub value: Float,
    #[serde(skip)]
    pub roots: Vec<(usize, Float)>,
}

impl DimensionReport {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }
}

/// Bisection in double precision down to a narrow bracket.
fn bracket_f64(table: &TraceTable, m: usize) -> Result<(f64, f64)> {
    let f = |s: f64| truncated_determinant(&table.traces_f64(s, m), 1.0);
    let (mut lo, mut hi) = ROOT_BRACKET;
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo.is_finite() && fhi.is_finite()) || flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let rising = flo < 0.0;
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v == 0.0 {
            return Ok((mid, mid + 1e-12));
        }
        if (v < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

fn abs(x: Float) -> Float {
    if x < Float::ZERO {
        -x
    } else {
        x
    }
}

/// Secant iteration at full precision, started from the double bracket.
fn refine(p: &PreparedTraces, m: usize, lo: f64, hi: f64, bits: usize) -> Float {
    let tol = p.context().round(&pow2(-(bits as isize)));
    let (mut x0, mut x1) = (p.float(lo), p.float(hi));
    let (mut f0, mut f1) = (p.determinant(&x0, m), p.determinant(&x1, m));
    for _ in 0..100 {
        if f1 == f0 {
            break;
        }
        let x2 = &x1 - &f1 * (&x1 - &x0) / (&f1 - &f0);
        let step = abs(&x2 - &x1);
        x0 = std::mem::replace(&mut x1, x2);
        f0 = std::mem::replace(&mut f1, p.determinant(&x1, m));
        if step <= tol {
            break;
        }
    }
    x1
}

/// Roots of the truncations of order `2..=order`, at `bits` precision
/// (doubled while the final residual exceeds `2^-128`).
pub fn solve_table(table: &TraceTable, order: usize, bits: usize) -> Result<DimensionReport> {
    if order < 2 {
        return Err(Error::InvalidArgument("truncation order must be at least 2".into()));
    }
    if order > table.max_period() {
        return Err(Error::InvalidArgument(format!(
            "order {order} exceeds the {} tabulated periods",
            table.max_period()
        )));
    }
    if bits < 64 {
        return Err(Error::InvalidArgument("precision must be at least 64 bits".into()));
    }
    let final_bracket = bracket_f64(table, order)?;
    let mut bits = bits;
    loop {
        let p = table.prepare(bits);
        let mut roots = Vec::new();
        for m in 2..order {
            if let Ok((lo, hi)) = bracket_f64(table, m) {
                roots.push((m, refine(&p, m, lo, hi, bits)));
            }
        }
        let s = refine(&p, order, final_bracket.0, final_bracket.1, bits);
        let residual = abs(p.determinant(&s, order));
        roots.push((order, s.clone()));
        if residual > p.context().round(&pow2(-RESIDUAL_TOL_BITS)) && bits < MAX_BITS {
            bits *= 2;
            continue;
        }
        let deltas: Vec<(usize, f64)> = roots
            .windows(2)
            .filter(|w| w[1].0 == w[0].0 + 1)
            .map(|w| (w[1].0, abs(&w[1].1 - &w[0].1).to_f64().value()))
            .collect();
        let delta = deltas.last().filter(|(m, _)| *m == order).map(|&(_, d)| d);
        let printable = (bits as f64 * std::f64::consts::LOG10_2) as usize - 3;
        let digits = match delta {
            Some(d) if d > 0.0 => ((-d.log10()).floor().max(0.0) as usize).min(printable),
            _ => printable,
        };
        return Ok(DimensionReport {
            order,
            bits,
            s_m: rational_to_decimal(&float_to_rational(&s), printable),
            digits,
            residual: residual.to_f64().value(),
            delta,
            orbit_counts: (1..=order).map(|n| table.orbit_count(n)).collect(),
            deltas,
            value: s,
            roots,
        });
    }
}

pub fn solve_system(sys: &CantorSystem, order: usize, bits: usize, budget: u128) -> Result<DimensionReport> {
    solve_table(&TraceTable::from_system(sys, order, budget)?, order, bits)
}

/// Hausdorff dimension of the Gauss–Cantor set of `set` from the order-`order`
/// truncated Fredholm determinant.
pub fn solve_dimension(set: &WordSet, order: usize, bits: usize) -> Result<DimensionReport> {
    solve_table(&TraceTable::gauss(set, order, DEFAULT_BUDGET)?, order, bits)
}
