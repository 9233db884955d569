use dashu::integer::{IBig, UBig};

use super::convergent::Mobius;
use super::surd::QuadraticSurd;
use super::word::{Digit, PeriodicWord, Word};
use crate::error::{Error, Result};

/// Applies an integer Möbius map to a surd exactly.
pub fn apply_mobius(m: &Mobius, y: &QuadraticSurd) -> Result<QuadraticSurd> {
    let num = y.mul(&int(&m.a))?.add(&int(&m.b))?;
    let den = y.mul(&int(&m.c))?.add(&int(&m.d))?;
    num.div(&den)
}

fn int(x: &IBig) -> QuadraticSurd {
    QuadraticSurd::new(x.clone(), IBig::ZERO, UBig::ONE, IBig::ONE).expect("integer surd")
}

/// Value `y >= 1` of the purely periodic expansion `[c1; c2, ..., ck, c1, ...]`.
pub fn purely_periodic_value(period: &[Digit]) -> Result<QuadraticSurd> {
    let (&first, rest) = period
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("period must be nonempty".into()))?;
    if period.contains(&0) {
        return Err(Error::ZeroDigit);
    }
    let mut m = Mobius::of_head(first as i64);
    for &x in rest {
        m.push(x);
    }
    // y = (P y + P') / (Q y + Q')  =>  Q y² + (Q' - P) y - P' = 0
    let (p, pp, q, qp) = (&m.a, &m.b, &m.c, &m.d);
    let lin = p - qp;
    let disc = &lin * &lin + IBig::from(4) * q * pp;
    let disc = UBig::try_from(disc).map_err(|_| Error::DivisionByZero)?;
    let y = QuadraticSurd::new(lin, IBig::ONE, disc, IBig::from(2) * q)?;
    // Degenerate maps cannot arise from positive digits; check anyway.
    if apply_mobius(&m, &y)? != y {
        return Err(Error::InvalidArgument(
            "periodic fixed point failed back-substitution".into(),
        ));
    }
    Ok(y)
}

/// Exact value of `[a0; pre, (period)^∞]` as a quadratic surd.
///
/// The result `x` satisfies `x = M_pre(y)` with `y = M_period(y)`; both
/// identities are re-checked exactly before returning.
pub fn eval_periodic(pre: &Word, period: &[Digit]) -> Result<QuadraticSurd> {
    let y = purely_periodic_value(period)?;
    let m = Mobius::of_word(pre);
    let x = apply_mobius(&m, &y)?;
    Ok(x)
}

impl PeriodicWord {
    pub fn value(&self) -> Result<QuadraticSurd> {
        eval_periodic(&self.pre, &self.period)
    }
}
