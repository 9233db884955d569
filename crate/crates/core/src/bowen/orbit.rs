use dashu::integer::IBig;

use crate::cantor::{block_sequences, level_count, WordSet};
use crate::cf::{apply_mobius, purely_periodic_value, Digit, Enclosure, Mobius, QuadraticSurd};
use crate::error::{check_budget, Error, Result};
use crate::par;

/// A fixed point of `ψⁿ`, where `ψ` acts on `I(β)` as `G^{|β|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicOrbit {
    /// Indices into the word set, one per block.
    pub blocks: Vec<usize>,
    /// Concatenated digits of the blocks.
    pub word: Vec<Digit>,
    /// Size of the word set the blocks index into.
    pub set_size: usize,
    /// `x = [0; w, w, ...]`.
    pub fixed_point: QuadraticSurd,
    /// Signed `(ψⁿ)'(x) = (-1)^k (q_k + q_{k-1} x)²`, `k = |w|`.
    pub multiplier: QuadraticSurd,
}

impl PeriodicOrbit {
    pub fn from_blocks(set: &WordSet, blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("orbit needs at least one block".into()));
        }
        let words = set.words();
        let mut word = Vec::new();
        for &i in &blocks {
            let b = words
                .get(i)
                .ok_or_else(|| Error::InvalidArgument(format!("block index {i} out of range")))?;
            word.extend_from_slice(b);
        }
        let (fixed_point, multiplier) = fixed_point_and_multiplier(&word)?;
        Ok(PeriodicOrbit {
            blocks,
            word,
            set_size: set.len(),
            fixed_point,
            multiplier,
        })
    }

    pub fn period(&self) -> usize {
        self.blocks.len()
    }

    /// Smallest `r` such that rotating the blocks by `r` gives them back.
    pub fn rotation_period(&self) -> usize {
        rotation_period(&self.blocks)
    }

    /// Checks `ψⁿ(x) = x` by substituting `x` into the branch map exactly.
    pub fn verify(&self) -> Result<bool> {
        let y = self.fixed_point.recip()?;
        Ok(apply_mobius(&Mobius::of_digits(&self.word), &y)? == self.fixed_point)
    }
}

fn fixed_point_and_multiplier(word: &[Digit]) -> Result<(QuadraticSurd, QuadraticSurd)> {
    let y = purely_periodic_value(word)?;
    let x = y.recip()?;
    let m = Mobius::of_digits(word);
    let to_surd = |v: &IBig| QuadraticSurd::new(v.clone(), IBig::ZERO, dashu::integer::UBig::ONE, IBig::ONE);
    let base = x.mul(&to_surd(&m.d)?)?.add(&to_surd(&m.c)?)?;
    let sq = base.mul(&base)?;
    let d = if word.len() % 2 == 0 { sq } else { sq.neg() };
    Ok((x, d))
}

pub(crate) fn rotation_period(blocks: &[usize]) -> usize {
    let n = blocks.len();
    (1..=n)
        .find(|&r| n % r == 0 && (0..n).all(|i| blocks[i] == blocks[(i + r) % n]))
        .unwrap_or(n)
}

/// Lexicographically least rotation.
pub(crate) fn is_canonical_rotation(blocks: &[usize]) -> bool {
    let n = blocks.len();
    (1..n).all(|r| {
        let rotated = blocks[r..].iter().chain(&blocks[..r]);
        blocks.iter().le(rotated)
    })
}

/// All `|B|ⁿ` fixed points of `ψⁿ`, one per block word, in lexicographic
/// block order.
pub fn enumerate_periodic(set: &WordSet, n: usize, budget: u128) -> Result<Vec<PeriodicOrbit>> {
    if n == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    check_budget(level_count(set, n), budget)?;
    let seqs: Vec<Vec<usize>> = block_sequences(set.len(), n).collect();
    par::map(&seqs, |b| PeriodicOrbit::from_blocks(set, b.clone()))
        .into_iter()
        .collect()
}

/// Certified enclosure of the signed multiplier.
pub fn multiplier(orbit: &PeriodicOrbit, bits: usize) -> Enclosure {
    orbit.multiplier.enclosure(bits)
}
