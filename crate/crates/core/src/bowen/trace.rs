use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu::integer::UBig;
use dashu::rational::RBig;

use super::orbit::{is_canonical_rotation, rotation_period, PeriodicOrbit};
use crate::cantor::{block_sequences, level_count, CantorSystem, WordSet};
use crate::cf::{Float, PrecisionContext, QuadraticSurd};
use crate::error::{check_budget, Error, Result};
use crate::par;

/// Fixed points of one period that share a multiplier.
///
/// Rotating a block word by whole blocks moves along the same orbit, so the
/// multiplier only depends on the rotation class; `multiplicity` counts the
/// distinct fixed points in the class.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitClass {
    pub multiplicity: u64,
    pub multiplier: QuadraticSurd,
}

/// Exact orbit data for periods `1..=max_period`, enough to evaluate
/// `tr(ℒ_sⁿ) = Σ |D|^{-s} / (1 - 1/D)` at any `s`.
#[derive(Clone, Debug)]
pub struct TraceTable {
    periods: Vec<Vec<OrbitClass>>,
}

impl TraceTable {
    pub fn gauss(set: &WordSet, max_period: usize, budget: u128) -> Result<Self> {
        let total = (1..=max_period).fold(0u128, |acc, n| acc.saturating_add(level_count(set, n)));
        check_budget(total, budget)?;
        let mut periods = Vec::with_capacity(max_period);
        for n in 1..=max_period {
            let seqs: Vec<Vec<usize>> = block_sequences(set.len(), n)
                .filter(|b| is_canonical_rotation(b))
                .collect();
            let classes = par::map(&seqs, |b| -> Result<OrbitClass> {
                let orbit = PeriodicOrbit::from_blocks(set, b.clone())?;
                Ok(OrbitClass {
                    multiplicity: rotation_period(b) as u64,
                    multiplier: orbit.multiplier,
                })
            });
            periods.push(classes.into_iter().collect::<Result<Vec<_>>>()?);
        }
        Ok(TraceTable { periods })
    }

    /// `branches` maps of constant slope: every point of period `n` has
    /// multiplier `slopeⁿ`.
    pub fn affine(branches: u32, slope: &RBig, max_period: usize) -> Result<Self> {
        if branches == 0 || *slope <= RBig::ONE {
            return Err(Error::InvalidArgument(
                "affine system needs a branch and slope > 1".into(),
            ));
        }
        let mut periods = Vec::with_capacity(max_period);
        for n in 1..=max_period {
            let multiplicity = (branches as u64)
                .checked_pow(n as u32)
                .ok_or_else(|| Error::InvalidArgument("too many affine orbits".into()))?;
            let d = (0..n).fold(RBig::ONE, |acc, _| acc * slope);
            periods.push(vec![OrbitClass {
                multiplicity,
                multiplier: QuadraticSurd::from_rational(&d),
            }]);
        }
        Ok(TraceTable { periods })
    }

    pub fn from_system(sys: &CantorSystem, max_period: usize, budget: u128) -> Result<Self> {
        match sys {
            CantorSystem::Gauss(spec) => Self::gauss(&spec.set, max_period, budget),
            CantorSystem::Affine { branches, slope } => {
                let slope = RBig::try_from(*slope)
                    .map_err(|_| Error::InvalidArgument(format!("slope {slope} is not finite")))?;
                Self::affine(*branches, &slope, max_period)
            }
        }
    }

    pub fn max_period(&self) -> usize {
        self.periods.len()
    }

    pub fn classes(&self, n: usize) -> &[OrbitClass] {
        &self.periods[n - 1]
    }

    /// Number of fixed points of `ψⁿ`.
    pub fn orbit_count(&self, n: usize) -> u128 {
        self.classes(n).iter().map(|c| c.multiplicity as u128).sum()
    }

    /// `tr(ℒ_sⁿ)` for `n = 1..=m` in double precision.
    pub fn traces_f64(&self, s: f64, m: usize) -> Vec<f64> {
        self.periods[..m]
            .iter()
            .map(|classes| {
                classes
                    .iter()
                    .map(|c| {
                        let d = c.multiplier.to_f64();
                        c.multiplicity as f64 * d.abs().powf(-s) / (1.0 - 1.0 / d)
                    })
                    .sum()
            })
            .collect()
    }

    /// Rounds the per-class constants once for repeated evaluation.
    pub fn prepare(&self, bits: usize) -> PreparedTraces {
        let ctx = PrecisionContext::new(bits + GUARD_BITS);
        let flat: Vec<(usize, &OrbitClass)> = self
            .periods
            .iter()
            .enumerate()
            .flat_map(|(n, cs)| cs.iter().map(move |c| (n, c)))
            .collect();
        let terms = par::map(&flat, |&(n, c)| {
            let abs = if c.multiplier.signum() < 0 {
                c.multiplier.neg()
            } else {
                c.multiplier.clone()
            };
            let weight = c
                .multiplier
                .div(&c.multiplier.add_int(-1))
                .expect("|D| > 1")
                .enclosure(ctx.bits)
                .midpoint()
                * RBig::from(UBig::from(c.multiplicity));
            let log_abs = ctx.round(&abs.enclosure(ctx.bits).midpoint()).ln();
            (n, ctx.round(&weight), log_abs)
        });
        let mut periods = vec![Vec::new(); self.periods.len()];
        for (n, w, l) in terms {
            periods[n].push((w, l));
        }
        PreparedTraces { ctx, periods }
    }
}

/// Extra bits carried through the trace sums.
const GUARD_BITS: usize = 32;

/// Trace constants rounded to a fixed working precision.
#[derive(Clone, Debug)]
pub struct PreparedTraces {
    ctx: PrecisionContext,
    /// Per period: `(multiplicity / (1 - 1/D), ln |D|)`.
    periods: Vec<Vec<(Float, Float)>>,
}

impl PreparedTraces {
    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn float(&self, x: f64) -> Float {
        self.ctx.round(&RBig::try_from(x).expect("finite"))
    }

    /// `tr(ℒ_sⁿ)` for `n = 1..=m`.
    pub fn traces(&self, s: &Float, m: usize) -> Vec<Float> {
        let flat: Vec<(usize, &(Float, Float))> = self.periods[..m]
            .iter()
            .enumerate()
            .flat_map(|(n, ts)| ts.iter().map(move |t| (n, t)))
            .collect();
        let terms = par::map(&flat, |&(n, (w, l))| (n, w * (-(s * l)).exp()));
        let mut out = vec![self.ctx.round(&RBig::ZERO); m];
        for (n, t) in terms {
            out[n] = &out[n] + t;
        }
        out
    }

    /// `1 + Σ_{n ≤ m} dₙ(s)`.
    pub fn determinant(&self, s: &Float, m: usize) -> Float {
        let one = self.ctx.round(&RBig::ONE);
        truncated_determinant(&self.traces(s, m), one)
    }
}

/// Trace of `ℒ_sⁿ` from an explicit, complete list of period-`n` orbits.
pub fn trace(s: &Float, n: usize, orbits: &[PeriodicOrbit]) -> Result<Float> {
    let set_size = orbits.first().map_or(0, |o| o.set_size);
    let expected = (set_size as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let mut seen: Vec<&[usize]> = orbits.iter().map(|o| o.blocks.as_slice()).collect();
    seen.sort();
    seen.dedup();
    if orbits.iter().any(|o| o.period() != n || o.set_size != set_size)
        || seen.len() != orbits.len()
        || orbits.len() as u128 != expected
    {
        return Err(Error::InvalidArgument(format!(
            "orbit list for period {n} is incomplete or mixed ({} of {expected})",
            orbits.len()
        )));
    }
    let ctx = PrecisionContext::new(s.precision().max(64) + GUARD_BITS);
    let zero = ctx.round(&RBig::ZERO);
    Ok(orbits.iter().fold(zero, |acc, o| {
        let d = &o.multiplier;
        let abs = if d.signum() < 0 { d.neg() } else { d.clone() };
        let w = d.div(&d.add_int(-1)).expect("|D| > 1").enclosure(ctx.bits).midpoint();
        let l = ctx.round(&abs.enclosure(ctx.bits).midpoint()).ln();
        acc + ctx.round(&w) * (-(s * &l)).exp()
    }))
}

/// Minimal arithmetic needed by the coefficient recursion.
pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_count(like: &Self, n: usize) -> Self;
}

impl Scalar for f64 {
    fn from_count(_: &Self, n: usize) -> Self {
        n as f64
    }
}

impl Scalar for Float {
    fn from_count(like: &Self, n: usize) -> Self {
        Float::from(n).with_precision(like.precision()).value()
    }
}

/// `d₁, ..., d_M` of `det(Id - zℒ_s) = 1 + Σ dₙ zⁿ` from the traces
/// `tr(ℒ_s), ..., tr(ℒ_s^M)`, via `dₙ = -(1/n) Σ_{k=1}^{n} tr_k d_{n-k}`.
pub fn fredholm_coefficients<T: Scalar>(traces: &[T], one: T) -> Vec<T> {
    let mut d = vec![one];
    for n in 1..=traces.len() {
        let mut acc = T::from_count(&d[0], 0);
        for k in 1..=n {
            acc = acc + traces[k - 1].clone() * d[n - k].clone();
        }
        d.push(-(acc / T::from_count(&d[0], n)));
    }
    d.remove(0);
    d
}

pub fn truncated_determinant<T: Scalar>(traces: &[T], one: T) -> T {
    fredholm_coefficients(traces, one.clone())
        .into_iter()
        .fold(one, |acc, d| acc + d)
}

/// `(|B|ⁿ)` fixed-point counts as a plain list, for reports.
pub fn orbit_counts(table: &TraceTable) -> Vec<u128> {
    (1..=table.max_period()).map(|n| table.orbit_count(n)).collect()
}
