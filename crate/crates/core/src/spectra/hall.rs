use crate::cf::{lagrange_value, markov_value, Digit, EventuallyPeriodicSeq, PrecisionContext};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Digits allowed in the two tails.
const C4: Digit = 4;

/// `C(4) = [(√2-1)/2, 2(√2-1)]` hull, i.e. the range of `[0; a1, a2, ...]`
/// with every `ai ≤ 4`.
fn c4_hull() -> Interval {
    let r = std::f64::consts::SQRT_2 - 1.0;
    Interval::new((0.5 * r).next_down(), (2.0 * r).next_up())
}

/// Hull of `C(4) ∩ I(prefix)`.
fn hull(prefix: &[Digit]) -> Interval {
    prefix.iter().rev().fold(c4_hull(), |y, &d| y.cf_step(d))
}

/// Full cylinder `I(prefix)`.
fn cylinder(prefix: &[Digit]) -> Interval {
    prefix.iter().rev().fold(Interval::new(0.0, 1.0), |y, &d| y.cf_step(d))
}

#[derive(Clone, Debug)]
pub struct HallRealization {
    pub target: f64,
    pub c0: Digit,
    /// Leading digits of `x = [0; a1, a2, ...]`, continued by `2, 2, ...`.
    pub x_digits: Vec<Digit>,
    /// Leading digits of `y = [0; b1, b2, ...]`, continued by `2, 2, ...`.
    pub y_digits: Vec<Digit>,
    /// `… 2 2 bₙ … b₁ c₀ a₁ … aₙ 2 2 …`, whose Markov value is `c₀ + x + y`.
    pub sequence: EventuallyPeriodicSeq,
    /// `bₙ … b₁ c₀ a₁ … aₙ`, repeated, for a Lagrange realisation.
    pub periodic: Vec<Digit>,
    pub markov: f64,
    pub lagrange: f64,
    pub eps: f64,
}

struct Search {
    target: f64,
    eps: f64,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn descend(&mut self, x: &mut Vec<Digit>, y: &mut Vec<Digit>) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if cylinder(x).width() + cylinder(y).width() < self.eps {
            return Some(true);
        }
        let mut options: Vec<(f64, Digit, Digit)> = Vec::with_capacity(16);
        for a in 1..=C4 {
            x.push(a);
            let hx = hull(x);
            x.pop();
            for b in 1..=C4 {
                y.push(b);
                let s = hx + hull(y);
                y.pop();
                if s.contains(self.target) {
                    options.push(((0.5 * (s.lo + s.hi) - self.target).abs(), a, b));
                }
            }
        }
        options.sort_by(|p, q| p.0.total_cmp(&q.0).then((p.1, p.2).cmp(&(q.1, q.2))));
        for (_, a, b) in options {
            x.push(a);
            y.push(b);
            if self.descend(x, y)? {
                return Some(true);
            }
            x.pop();
            y.pop();
        }
        Some(false)
    }
}

/// Writes `target = c₀ + x + y` with `x, y ∈ C(4)` to within `eps` and builds
/// the corresponding sequences, then checks their spectrum values exactly.
///
/// Any `c₀ ≥ 5` keeps the supremum at the center, so targets from
/// `5 + (√2 - 1)` upwards are accepted; from 6 on a decomposition always
/// exists.
pub fn hall_realize(target: f64, eps: f64) -> Result<HallRealization> {
    if !(target >= 4.0 + std::f64::consts::SQRT_2 && target.is_finite()) {
        return Err(Error::InvalidArgument(format!("target {target} is below 4 + √2")));
    }
    if !(eps > 1e-14 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("precision {eps} out of range")));
    }
    let sum = c4_hull() + c4_hull();
    let first = (target - sum.hi).ceil().max(1.0) as Digit;
    let last = (target - sum.lo).floor() as Digit;
    for c0 in first..=last {
        let rest = target - c0 as f64;
        if !sum.contains(rest) || c0 <= C4 {
            continue;
        }
        let mut s = Search {
            target: rest,
            eps,
            nodes: 0,
            budget: 1 << 22,
        };
        let (mut x, mut y) = (Vec::new(), Vec::new());
        match s.descend(&mut x, &mut y) {
            None => {
                return Err(Error::BudgetExceeded {
                    needed: s.nodes as u128,
                    budget: s.budget as u128,
                })
            }
            Some(false) => continue,
            Some(true) => return assemble(target, c0, x, y, eps),
        }
    }
    Err(Error::InvalidArgument(format!(
        "no Hall decomposition found for {target}"
    )))
}

fn assemble(target: f64, c0: Digit, x: Vec<Digit>, y: Vec<Digit>, eps: f64) -> Result<HallRealization> {
    let left: Vec<Digit> = y.iter().rev().copied().collect();
    let sequence = EventuallyPeriodicSeq::new(vec![2], left.clone(), vec![c0], x.clone(), vec![2])?;
    let periodic: Vec<Digit> = left.iter().chain([&c0]).chain(&x).copied().collect();
    let ctx = PrecisionContext::new(128);
    let markov = markov_value(&sequence, &ctx)?.to_f64();
    let lagrange = lagrange_value(&EventuallyPeriodicSeq::periodic(periodic.clone())?, &ctx)?.to_f64();
    // both values lie in c0 + I(x) + I(y), which has width below eps
    let slack = eps + 1e-12;
    if (markov - target).abs() > slack || (lagrange - target).abs() > slack {
        return Err(Error::InvalidArgument(format!(
            "realisation of {target} drifted: markov {markov}, lagrange {lagrange}"
        )));
    }
    Ok(HallRealization {
        target,
        c0,
        x_digits: x,
        y_digits: y,
        sequence,
        periodic,
        markov,
        lagrange,
        eps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_uses_five() {
        let h = hall_realize(6.0, 1e-8).unwrap();
        assert_eq!(h.c0, 5);
        assert!((h.markov - 6.0).abs() <= 1e-8);
    }

    #[test]
    fn symmetric_endpoint_picks_twos() {
        let t = 5.0 + 2.0 * (std::f64::consts::SQRT_2 - 1.0);
        let h = hall_realize(t, 1e-8).unwrap();
        assert_eq!(h.c0, 5);
        assert!(h.x_digits.iter().chain(&h.y_digits).all(|&d| d == 2), "{h:?}");
    }

    #[test]
    fn rejects_targets_below_the_ray() {
        assert!(hall_realize(5.4, 1e-8).is_err());
    }
}
