use std::fmt::Write as _;

use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use super::wordset::WordSet;
use crate::cf::{Digit, Mobius};
use crate::error::{check_budget, Error, Result};
use crate::par;

/// Default cap on the number of words a single enumeration may produce.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// `K(γ, B)`: continued fractions `[0; γ, b1, b2, ...]` with every `bi ∈ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCantorSpec {
    pub prefix: Vec<Digit>,
    pub set: WordSet,
}

impl GaussCantorSpec {
    pub fn new(set: WordSet) -> Self {
        GaussCantorSpec {
            prefix: Vec::new(),
            set,
        }
    }

    pub fn with_prefix(prefix: Vec<Digit>, set: WordSet) -> Result<Self> {
        if prefix.contains(&0) {
            return Err(Error::ZeroDigit);
        }
        Ok(GaussCantorSpec { prefix, set })
    }
}

/// The closed interval `I(β)` of numbers whose expansion begins with `β`.
///
/// `lambda`/`big_lambda` bound `|ψ'|` for the branch of the map on this
/// cylinder: with `t ∈ [0, 1]` the tail, `|(G^n)'| = (q_n + q_{n-1} t)²`, so
/// `λ = q_n²` and `Λ = (q_n + q_{n-1})²`. A prefix, if any, is excluded from
/// these since it is not part of the dynamics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderInterval {
    pub word: Vec<Digit>,
    pub level: usize,
    pub lo: RBig,
    pub hi: RBig,
    pub lambda: RBig,
    pub big_lambda: RBig,
}

impl CylinderInterval {
    pub fn length(&self) -> RBig {
        &self.hi - &self.lo
    }

    /// CSV row `level,word,lo_num,lo_den,hi_num,hi_den`; digits of the word are
    /// separated by spaces so the row stays six columns wide.
    pub fn csv_row(&self) -> String {
        let mut s = String::new();
        let digits: Vec<String> = self.word.iter().map(|d| d.to_string()).collect();
        write!(
            s,
            "{},{},{},{},{},{}",
            self.level,
            digits.join(" "),
            self.lo.numerator(),
            self.lo.denominator(),
            self.hi.numerator(),
            self.hi.denominator()
        )
        .expect("write to String");
        s
    }
}

pub const CSV_HEADER: &str = "level,word,lo_num,lo_den,hi_num,hi_den";

fn ratio(p: &IBig, q: &IBig) -> RBig {
    RBig::from_parts_signed(p.clone(), q.clone())
}

fn derivative_bounds(dynamic: &[Digit]) -> (RBig, RBig) {
    let m = Mobius::of_digits(dynamic);
    let (q, q_prev) = (&m.c, &m.d);
    let s = q + q_prev;
    (RBig::from(q * q), RBig::from(&s * &s))
}

fn build(prefix_len: usize, word: Vec<Digit>, level: usize) -> CylinderInterval {
    let m = Mobius::of_digits(&word);
    let a = ratio(&m.a, &m.c);
    let b = ratio(&(&m.a + &m.b), &(&m.c + &m.d));
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let (lambda, big_lambda) = derivative_bounds(&word[prefix_len..]);
    CylinderInterval {
        word,
        level,
        lo,
        hi,
        lambda,
        big_lambda,
    }
}

/// `I(β)` with endpoints `p_n/q_n` and `(p_n + p_{n-1})/(q_n + q_{n-1})`.
pub fn cylinder_interval(beta: &[Digit]) -> Result<CylinderInterval> {
    if beta.is_empty() {
        return Err(Error::EmptyWord);
    }
    if beta.contains(&0) {
        return Err(Error::ZeroDigit);
    }
    Ok(build(0, beta.to_vec(), beta.len()))
}

/// All `|B|^m` block sequences of length `m`, as indices into `B`, in
/// lexicographic order.
pub(crate) fn block_sequences(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(m as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut k| {
        let mut seq = vec![0; m];
        for slot in seq.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        seq
    })
}

pub(crate) fn level_count(set: &WordSet, m: usize) -> u128 {
    (set.len() as u128).checked_pow(m as u32).unwrap_or(u128::MAX)
}

/// The level-`m` cover `R_m` of `K(γ, B)`: one cylinder per concatenation of
/// `m` words of `B`, in lexicographic block order. Distinct cylinders have
/// disjoint interiors (they may share an endpoint) because `B` is primitive.
pub fn cover(spec: &GaussCantorSpec, m: usize, budget: u128) -> Result<Vec<CylinderInterval>> {
    if m == 0 {
        return Err(Error::InvalidArgument("cover level must be at least 1".into()));
    }
    check_budget(level_count(&spec.set, m), budget)?;
    let words = spec.set.words();
    let heads: Vec<usize> = (0..words.len()).collect();
    Ok(par::flat_map(&heads, |&first| {
        block_sequences(words.len(), m - 1)
            .map(|rest| {
                let mut w = spec.prefix.clone();
                w.extend_from_slice(&words[first]);
                for &i in &rest {
                    w.extend_from_slice(&words[i]);
                }
                build(spec.prefix.len(), w, m)
            })
            .collect()
    }))
}

/// Denominators of `[0; β]` and `[0; βᵀ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCheck {
    pub q: UBig,
    pub q_transpose: UBig,
}

impl EulerCheck {
    pub fn equal(&self) -> bool {
        self.q == self.q_transpose
    }
}

/// Compares the reduced denominators of `[0; β]` and its reversal, each
/// computed by direct rational evaluation.
pub fn euler_denominator_check(beta: &[Digit]) -> Result<EulerCheck> {
    if beta.is_empty() {
        return Err(Error::EmptyWord);
    }
    let eval = |digits: Vec<Digit>| -> Result<UBig> {
        let w = crate::cf::Word::with_head(0, digits)?;
        Ok(w.eval_finite()?.denominator().clone())
    };
    Ok(EulerCheck {
        q: eval(beta.to_vec())?,
        q_transpose: eval(beta.iter().rev().copied().collect())?,
    })
}
