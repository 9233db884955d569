use std::fmt;
use std::str::FromStr;

use super::word::{parse_digits, write_digits, Digit, PeriodicWord, Word};
use crate::error::{Error, Result};

/// A bi-infinite sequence of positive digits that is eventually periodic in
/// both directions:
///
/// ```text
/// … LP LP  lp  | c |  rp  RP RP …
/// ```
///
/// Index 0 is the first digit of `center` (or, if the center is empty, the
/// first digit to its right). Shifting is index translation, and
/// transposition (reading the sequence backwards) is again of this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicSeq {
    left_period: Vec<Digit>,
    left_pre: Vec<Digit>,
    center: Vec<Digit>,
    right_pre: Vec<Digit>,
    right_period: Vec<Digit>,
}

impl EventuallyPeriodicSeq {
    pub fn new(
        left_period: Vec<Digit>,
        left_pre: Vec<Digit>,
        center: Vec<Digit>,
        right_pre: Vec<Digit>,
        right_period: Vec<Digit>,
    ) -> Result<Self> {
        if left_period.is_empty() || right_period.is_empty() {
            return Err(Error::InvalidArgument("periods must be nonempty".into()));
        }
        let all = [&left_period, &left_pre, &center, &right_pre, &right_period];
        if all.iter().any(|part| part.contains(&0)) {
            return Err(Error::ZeroDigit);
        }
        Ok(EventuallyPeriodicSeq {
            left_period,
            left_pre,
            center,
            right_pre,
            right_period,
        })
    }

    /// The two-sided periodic sequence `… w w w …` with `w[0]` at index 0.
    pub fn periodic(period: Vec<Digit>) -> Result<Self> {
        Self::new(period.clone(), vec![], vec![], vec![], period)
    }

    pub fn left_period(&self) -> &[Digit] {
        &self.left_period
    }

    pub fn left_pre(&self) -> &[Digit] {
        &self.left_pre
    }

    pub fn center(&self) -> &[Digit] {
        &self.center
    }

    pub fn right_pre(&self) -> &[Digit] {
        &self.right_pre
    }

    pub fn right_period(&self) -> &[Digit] {
        &self.right_period
    }

    /// First index of the right periodic region.
    pub fn right_start(&self) -> i64 {
        (self.center.len() + self.right_pre.len()) as i64
    }

    /// One past the last index of the left periodic region.
    pub fn left_end(&self) -> i64 {
        -(self.left_pre.len() as i64)
    }

    pub fn digit(&self, i: i64) -> Digit {
        let r0 = self.right_start();
        let l0 = self.left_end();
        if i >= r0 {
            let n = self.right_period.len() as i64;
            self.right_period[(i - r0).rem_euclid(n) as usize]
        } else if i >= self.center.len() as i64 {
            self.right_pre[(i - self.center.len() as i64) as usize]
        } else if i >= 0 {
            self.center[i as usize]
        } else if i >= l0 {
            self.left_pre[(i - l0) as usize]
        } else {
            let n = self.left_period.len() as i64;
            self.left_period[(i - l0).rem_euclid(n) as usize]
        }
    }

    /// `[x_k; x_{k+1}, x_{k+2}, …]` as an eventually periodic word.
    pub fn right_tail(&self, k: i64) -> PeriodicWord {
        let r0 = self.right_start();
        let n = self.right_period.len() as i64;
        let start = (k + 1).max(r0);
        let pre: Vec<Digit> = (k + 1..start).map(|i| self.digit(i)).collect();
        let period = (start..start + n).map(|i| self.digit(i)).collect();
        PeriodicWord {
            pre: Word::with_head(self.digit(k) as i64, pre).expect("positive digits"),
            period,
        }
    }

    /// `[0; x_{k-1}, x_{k-2}, …]` as an eventually periodic word.
    pub fn left_tail(&self, k: i64) -> PeriodicWord {
        let l0 = self.left_end();
        let n = self.left_period.len() as i64;
        let start = (k - 1).min(l0 - 1);
        let pre: Vec<Digit> = (start + 1..k).rev().map(|i| self.digit(i)).collect();
        let period = (0..n).map(|j| self.digit(start - j)).collect();
        PeriodicWord {
            pre: Word::with_head(0, pre).expect("positive digits"),
            period,
        }
    }

    /// The same sequence read backwards: `x'_i = x_{c-1-i}` with `c` the
    /// center length.
    pub fn transpose(&self) -> Self {
        let rev = |v: &[Digit]| v.iter().rev().copied().collect::<Vec<_>>();
        EventuallyPeriodicSeq {
            left_period: rev(&self.right_period),
            left_pre: rev(&self.right_pre),
            center: rev(&self.center),
            right_pre: rev(&self.left_pre),
            right_period: rev(&self.left_period),
        }
    }

    /// If the sequence is two-sided periodic, its period read from index 0.
    pub fn two_sided_period(&self) -> Option<Vec<Digit>> {
        let n = self.right_period.len() as i64;
        let m = self.left_period.len() as i64;
        let r0 = self.right_start();
        let from = self.left_end() - n * m;
        let fits = (from..r0).all(|i| self.digit(i) == self.digit(r0 + (i - r0).rem_euclid(n)));
        fits.then(|| (0..n).map(|i| self.digit(i)).collect())
    }
}

impl fmt::Display for EventuallyPeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("((")?;
        write_digits(f, &self.left_period)?;
        f.write_str("))")?;
        write_digits(f, &self.left_pre)?;
        f.write_str("|")?;
        write_digits(f, &self.center)?;
        f.write_str("|")?;
        write_digits(f, &self.right_pre)?;
        f.write_str("((")?;
        write_digits(f, &self.right_period)?;
        f.write_str("))")
    }
}

impl FromStr for EventuallyPeriodicSeq {
    type Err = Error;

    /// Parses `"((L))l|c|r((R))"`, e.g. `"((1))|3|((1))"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split('|').collect();
        let [left, center, right] = parts[..] else {
            return Err(Error::parse(s, "expected exactly two '|' separators"));
        };
        let left = left
            .trim()
            .strip_prefix("((")
            .ok_or_else(|| Error::parse(s, "left side must start with ((period))"))?;
        let (lp, lpre) = left
            .split_once("))")
            .ok_or_else(|| Error::parse(s, "unclosed left period"))?;
        let right = right
            .trim()
            .strip_suffix("))")
            .ok_or_else(|| Error::parse(s, "right side must end with ((period))"))?;
        let (rpre, rp) = right
            .rsplit_once("((")
            .ok_or_else(|| Error::parse(s, "unopened right period"))?;
        let trim = |t: &str| t.trim().trim_matches(',').to_owned();
        Self::new(
            parse_digits(s, lp)?,
            parse_digits(s, &trim(lpre))?,
            parse_digits(s, center)?,
            parse_digits(s, &trim(rpre))?,
            parse_digits(s, rp)?,
        )
        .map_err(|e| Error::parse(s, e.to_string()))
    }
}
