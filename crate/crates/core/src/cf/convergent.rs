use dashu::integer::IBig;
use dashu::rational::RBig;

use super::word::{Digit, Word};
use crate::error::{Error, Result};

/// A convergent `p/q` of a continued fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub p: IBig,
    pub q: IBig,
}

impl Convergent {
    pub fn value(&self) -> RBig {
        RBig::from_parts_signed(self.p.clone(), self.q.clone())
    }
}

/// The integer Möbius map `t ↦ (a t + b) / (c t + d)` of a finite word.
///
/// For `[a0; a1, ..., an]` the columns are `(p_n, q_n)` and `(p_{n-1}, q_{n-1})`,
/// so evaluating at the complete quotient `y = [a_{n+1}; a_{n+2}, ...]` gives
/// the value of the extended expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mobius {
    pub a: IBig,
    pub b: IBig,
    pub c: IBig,
    pub d: IBig,
}

impl Mobius {
    pub fn identity() -> Self {
        Mobius {
            a: IBig::ONE,
            b: IBig::ZERO,
            c: IBig::ZERO,
            d: IBig::ONE,
        }
    }

    /// Seeds `p_{-1} = 1, q_{-1} = 0` followed by the head `a0`.
    pub fn of_head(a0: i64) -> Self {
        Mobius {
            a: IBig::from(a0),
            b: IBig::ONE,
            c: IBig::ONE,
            d: IBig::ZERO,
        }
    }

    /// The map of `[0; digits]`.
    pub fn of_digits(digits: &[Digit]) -> Self {
        let mut m = Mobius::of_head(0);
        for &x in digits {
            m.push(x);
        }
        m
    }

    pub fn of_word(w: &Word) -> Self {
        let mut m = Mobius::of_head(w.a0());
        for &x in w.digits() {
            m.push(x);
        }
        m
    }

    /// Appends one partial quotient (right-multiplies by `[[x, 1], [1, 0]]`).
    pub fn push(&mut self, x: Digit) {
        let x = IBig::from(x);
        let a = &x * &self.a + &self.b;
        let c = &x * &self.c + &self.d;
        self.b = std::mem::replace(&mut self.a, a);
        self.d = std::mem::replace(&mut self.c, c);
    }

    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// `ad - bc`, which is `±1` for continued fraction maps.
    pub fn det(&self) -> IBig {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, t: &RBig) -> Result<RBig> {
        let den = RBig::from(self.c.clone()) * t + RBig::from(self.d.clone());
        if den == RBig::ZERO {
            return Err(Error::DivisionByZero);
        }
        Ok((RBig::from(self.a.clone()) * t + RBig::from(self.b.clone())) / den)
    }

    pub fn last(&self) -> Convergent {
        Convergent {
            p: self.a.clone(),
            q: self.c.clone(),
        }
    }

    pub fn previous(&self) -> Convergent {
        Convergent {
            p: self.b.clone(),
            q: self.d.clone(),
        }
    }
}

/// All convergents `p_0/q_0, ..., p_n/q_n` of a nonempty word.
pub fn convergents(w: &Word) -> Result<Vec<Convergent>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut m = Mobius::of_head(w.a0());
    let mut out = Vec::with_capacity(w.digits().len() + 1);
    out.push(m.last());
    for &x in w.digits() {
        m.push(x);
        out.push(m.last());
    }
    Ok(out)
}

/// `(q_n, q_{n-1})` of `[0; digits]` in machine integers, or `None` on overflow.
pub fn denominators_u128(digits: &[Digit]) -> Option<(u128, u128)> {
    let (mut q, mut q_prev) = (1u128, 0u128);
    for &x in digits {
        let next = (x as u128).checked_mul(q)?.checked_add(q_prev)?;
        q_prev = q;
        q = next;
    }
    Some((q, q_prev))
}
