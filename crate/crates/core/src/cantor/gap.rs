use serde::Serialize;

use super::cylinder::block_sequences;
use crate::cf::{denominators_u128, Digit};
use crate::error::{check_budget, Error, Result};

/// Outcome of the two-child inequality
/// `|I(θ112)|^s + |I(θ221)|^s ≤ |I(θ)|^s` over all `θ ∈ {1,2}^{≤ n}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapExponentReport {
    pub s0: f64,
    pub n_max: usize,
    pub pass: bool,
    /// Largest left/right ratio seen; the check passes iff this is `≤ 1`.
    pub worst_ratio: f64,
    pub worst_word: Vec<Digit>,
    pub words_checked: u64,
}

/// `ln |I(β)| = -ln(q_n (q_n + q_{n-1}))`.
fn log_length(word: &[Digit]) -> f64 {
    let (q, qp) = denominators_u128(word).expect("desk-scale words fit in u128");
    -((q as f64).ln() + ((q + qp) as f64).ln())
}

pub fn gap_exponent_check(s0: f64, n_max: usize) -> Result<GapExponentReport> {
    if !(s0 > 0.0 && s0 < 1.0) {
        return Err(Error::InvalidArgument(format!("exponent {s0} not in (0, 1)")));
    }
    // 2^(n_max+1) words in total; keep to u128 denominators as well
    check_budget(1u128 << (n_max + 1).min(127), 1 << 26)?;
    let mut report = GapExponentReport {
        s0,
        n_max,
        pass: true,
        worst_ratio: f64::NEG_INFINITY,
        worst_word: Vec::new(),
        words_checked: 0,
    };
    for n in 0..=n_max {
        for idx in block_sequences(2, n) {
            let theta: Vec<Digit> = idx.iter().map(|&i| i as Digit + 1).collect();
            let child = |tail: [Digit; 3]| {
                let mut w = theta.clone();
                w.extend_from_slice(&tail);
                log_length(&w)
            };
            let parent = if theta.is_empty() { 0.0 } else { log_length(&theta) };
            let ratio = (s0 * (child([1, 1, 2]) - parent)).exp() + (s0 * (child([2, 2, 1]) - parent)).exp();
            report.words_checked += 1;
            if ratio > report.worst_ratio {
                report.worst_ratio = ratio;
                report.worst_word = theta;
            }
        }
    }
    report.pass = report.worst_ratio <= 1.0;
    Ok(report)
}
