use serde::Serialize;

use super::cylinder::{cover, level_count, GaussCantorSpec};
use crate::error::{check_budget, Error, Result};

/// A dynamically defined Cantor set for which covering bounds can be computed.
#[derive(Clone, Debug, PartialEq)]
pub enum CantorSystem {
    /// `K(γ, B)` under the Gauss map.
    Gauss(GaussCantorSpec),
    /// `branches` affine maps of constant slope, e.g. the middle-third set
    /// with `branches = 2`, `slope = 3`.
    Affine { branches: u32, slope: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DimBounds {
    pub alpha: f64,
    pub beta: f64,
    pub level: usize,
}

impl DimBounds {
    pub fn width(&self) -> f64 {
        self.beta - self.alpha
    }

    pub fn contains(&self, s: f64) -> bool {
        self.alpha <= s && s <= self.beta
    }
}

pub const BISECTION_TOL: f64 = 1e-12;

/// `(ln λ(J), ln Λ(J))` for every branch of the level-`m` cover.
fn log_derivatives(sys: &CantorSystem, m: usize, budget: u128) -> Result<Vec<(f64, f64)>> {
    match sys {
        CantorSystem::Gauss(spec) => Ok(cover(spec, m, budget)?
            .iter()
            .map(|c| (ln(&c.lambda), ln(&c.big_lambda)))
            .collect()),
        CantorSystem::Affine { branches, slope } => {
            if *branches == 0 || *slope <= 1.0 {
                return Err(Error::InvalidArgument("affine system needs slope > 1".into()));
            }
            let n = (*branches as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
            check_budget(n, budget)?;
            let l = m as f64 * slope.ln();
            Ok(vec![(l, l); n as usize])
        }
    }
}

fn ln(x: &dashu::rational::RBig) -> f64 {
    x.to_f64().value().ln()
}

/// `ln Σ exp(-s·ℓ)`, stable for large `ℓ`.
fn log_sum(s: f64, logs: &[f64]) -> f64 {
    let top = logs.iter().map(|&l| -s * l).fold(f64::NEG_INFINITY, f64::max);
    top + logs.iter().map(|&l| (-s * l - top).exp()).sum::<f64>().ln()
}

/// Root of the decreasing function `s ↦ ln Σ exp(-s ℓ_J) − rhs`, clamped to
/// `[0, 1]` since dimensions of subsets of the line live there.
fn exponent(logs: &[f64], rhs: f64) -> f64 {
    let g = |s: f64| log_sum(s, logs) - rhs;
    if g(0.0) <= 0.0 {
        return 0.0;
    }
    let mut hi = 1.0;
    // A root above 1 still means the bound is 1, but keep the bracket honest.
    while g(hi) > 0.0 {
        if hi >= 64.0 {
            return 1.0;
        }
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi)).min(1.0)
}

/// Covering bounds `α_m ≤ dim K ≤ β_m` from
/// `Σ λ(J)^{-β_m} = 1` and `Σ Λ(J)^{-α_m} = max |(ψ^{n0-1})'|`.
pub fn palis_takens_bounds(sys: &CantorSystem, m: usize, mixing_order: usize, budget: u128) -> Result<DimBounds> {
    if m == 0 || mixing_order == 0 {
        return Err(Error::InvalidArgument("level and mixing order start at 1".into()));
    }
    if let CantorSystem::Gauss(spec) = sys {
        check_budget(level_count(&spec.set, m), budget)?;
    }
    let logs = log_derivatives(sys, m, budget)?;
    let rhs = if mixing_order == 1 {
        0.0
    } else {
        log_derivatives(sys, mixing_order - 1, budget)?
            .iter()
            .map(|&(_, big)| big)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let small: Vec<f64> = logs.iter().map(|&(l, _)| l).collect();
    let big: Vec<f64> = logs.iter().map(|&(_, l)| l).collect();
    Ok(DimBounds {
        alpha: exponent(&big, rhs),
        beta: exponent(&small, 0.0),
        level: m,
    })
}
