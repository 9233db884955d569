use std::fmt;
use std::str::FromStr;

use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};

/// A single partial quotient. Always at least 1.
pub type Digit = u64;

/// A finite continued fraction word `[a0; a1, ..., an]`.
///
/// The head `a0` is optional: a word without head stands for `[0; a1, ..., an]`
/// and is what Gauss–Cantor constructions and one-sided tails use. Digits
/// after the head are strictly positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    head: Option<i64>,
    digits: Vec<Digit>,
}

impl Word {
    pub fn new(digits: Vec<Digit>) -> Result<Self> {
        check_digits(&digits)?;
        Ok(Word { head: None, digits })
    }

    pub fn with_head(head: i64, digits: Vec<Digit>) -> Result<Self> {
        check_digits(&digits)?;
        Ok(Word {
            head: Some(head),
            digits,
        })
    }

    pub fn head(&self) -> Option<i64> {
        self.head
    }

    /// The integer part, `0` when the word has no head.
    pub fn a0(&self) -> i64 {
        self.head.unwrap_or(0)
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    /// True when there is neither a head nor a digit.
    pub fn is_empty(&self) -> bool {
        self.head.is_none() && self.digits.is_empty()
    }

    /// Reverses the digits (the head, if any, is kept in place).
    pub fn transpose(&self) -> Word {
        let mut digits = self.digits.clone();
        digits.reverse();
        Word {
            head: self.head,
            digits,
        }
    }

    /// The expansion ending in a digit >= 2, obtained by folding a trailing 1
    /// into its predecessor (`[3; 7, 15, 1]` becomes `[3; 7, 16]`).
    pub fn canonical(&self) -> Word {
        let mut w = self.clone();
        if w.digits.last() == Some(&1) {
            w.digits.pop();
            match w.digits.last_mut() {
                Some(d) => *d += 1,
                None => w.head = Some(w.a0() + 1),
            }
        }
        w
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.last() != Some(&1)
    }

    /// Exact rational value of the finite expansion.
    pub fn eval_finite(&self) -> Result<RBig> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut value = RBig::ZERO;
        for &d in self.digits.iter().rev() {
            value = RBig::ONE / (RBig::from(d) + value);
        }
        Ok(value + RBig::from(self.a0()))
    }
}

fn check_digits(digits: &[Digit]) -> Result<()> {
    if digits.contains(&0) {
        Err(Error::ZeroDigit)
    } else {
        Ok(())
    }
}

/// Continued fraction expansion of `num / den`, in canonical form.
///
/// Integers give a word with only a head. `den` must be positive.
pub fn expand_rational(num: i64, den: u64) -> Result<Word> {
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    let mut n = num as i128;
    let mut d = den as i128;
    let head = n.div_euclid(d);
    n = n.rem_euclid(d);
    let mut digits = Vec::new();
    while n != 0 {
        // n/d in (0,1): next digit is floor(d/n)
        let q = d / n;
        let r = d % n;
        digits.push(q as Digit);
        d = n;
        n = r;
    }
    Ok(Word {
        head: Some(head as i64),
        digits,
    })
}

/// Same as [`expand_rational`] for arbitrary precision inputs.
pub fn expand_rational_big(value: &RBig) -> Word {
    let head = value.floor();
    let mut n: UBig = (value.numerator() - &head * IBig::from(value.denominator().clone()))
        .try_into()
        .expect("remainder is non-negative");
    let mut d = value.denominator().clone();
    let mut digits = Vec::new();
    while n != UBig::ZERO {
        let (q, r) = (&d / &n, &d % &n);
        digits.push(Digit::try_from(&q).expect("partial quotient fits in u64"));
        d = n;
        n = r;
    }
    Word {
        head: Some(i64::try_from(&head).expect("integer part fits in i64")),
        digits,
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = self.head {
            write!(f, "{h};")?;
        }
        write_digits(f, &self.digits)
    }
}

pub(crate) fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[Digit]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

pub(crate) fn parse_digits(input: &str, s: &str) -> Result<Vec<Digit>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let d: Digit = t.parse().map_err(|_| Error::parse(input, format!("bad digit {t:?}")))?;
            if d == 0 {
                return Err(Error::parse(input, "digits must be positive"));
            }
            Ok(d)
        })
        .collect()
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `"3;7,16"`, `"5;"` or `"1,2,2"`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(';') {
            Some((h, rest)) => {
                let head: i64 = h.trim().parse().map_err(|_| Error::parse(s, "bad integer head"))?;
                Ok(Word {
                    head: Some(head),
                    digits: parse_digits(s, rest)?,
                })
            }
            None => Ok(Word {
                head: None,
                digits: parse_digits(s, s)?,
            }),
        }
    }
}

/// An eventually periodic one-sided expansion `[a0; pre, (period)^∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicWord {
    pub pre: Word,
    pub period: Vec<Digit>,
}

impl PeriodicWord {
    pub fn new(pre: Word, period: Vec<Digit>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("period must be nonempty".into()));
        }
        check_digits(&period)?;
        Ok(PeriodicWord { pre, period })
    }

    /// Digit `i` of the sequence `a1, a2, ...` after the head (0-based).
    pub fn digit(&self, i: usize) -> Digit {
        let pre = self.pre.digits();
        if i < pre.len() {
            pre[i]
        } else {
            self.period[(i - pre.len()) % self.period.len()]
        }
    }

    /// First `n` digits after the head.
    pub fn truncate(&self, n: usize) -> Word {
        Word {
            head: self.pre.head,
            digits: (0..n).map(|i| self.digit(i)).collect(),
        }
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pre)?;
        if !self.pre.digits.is_empty() {
            f.write_str(",")?;
        }
        f.write_str("(")?;
        write_digits(f, &self.period)?;
        f.write_str(")")
    }
}

impl FromStr for PeriodicWord {
    type Err = Error;

    /// Parses `"0;2,1,(2,2,1,1)"`: the parenthesised block repeats forever.
    fn from_str(s: &str) -> Result<Self> {
        let open = s.find('(').ok_or_else(|| Error::parse(s, "missing periodic block"))?;
        let close = s
            .rfind(')')
            .filter(|&c| c > open && s[c + 1..].trim().is_empty())
            .ok_or_else(|| Error::parse(s, "periodic block must close the word"))?;
        let period = parse_digits(s, &s[open + 1..close])?;
        if period.is_empty() {
            return Err(Error::parse(s, "empty periodic block"));
        }
        let pre_str = s[..open].trim().trim_end_matches(',');
        let pre: Word = pre_str.parse().map_err(|_| Error::parse(s, "bad preperiod"))?;
        Ok(PeriodicWord { pre, period })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(expand_rational(355, 113).unwrap(), w("3;7,16"));
        assert_eq!(expand_rational(22, 7).unwrap(), w("3;7"));
        assert_eq!(expand_rational(1, 1).unwrap(), w("1;"));
        assert_eq!(expand_rational(-7, 2).unwrap(), w("-4;2"));
        assert_eq!(expand_rational(0, 5).unwrap(), w("0;"));
        assert!(expand_rational(1, 0).is_err());
    }

    #[test]
    fn canonical_folds_trailing_one() {
        assert_eq!(w("3;7,15,1").canonical(), w("3;7,16"));
        assert_eq!(w("0;1").canonical(), w("1;"));
        assert_eq!(w("3;7,15,1").eval_finite().unwrap(), w("3;7,16").eval_finite().unwrap());
    }

    #[test]
    fn eval_matches_hand_values() {
        assert_eq!(
            w("3;7,16").eval_finite().unwrap(),
            RBig::from_parts(355.into(), 113u8.into())
        );
        assert_eq!(
            w("1,2,3").eval_finite().unwrap(),
            RBig::from_parts(7.into(), 10u8.into())
        );
        assert_eq!(Word::default().eval_finite(), Err(Error::EmptyWord));
    }

    #[test]
    fn big_expansion_agrees() {
        let r = RBig::from_parts(IBig::from(-355), UBig::from(113u8));
        assert_eq!(expand_rational_big(&r), expand_rational(-355, 113).unwrap());
    }

    #[test]
    fn parse_and_print() {
        let p: PeriodicWord = "0;2,1,(2,2,1,1)".parse().unwrap();
        assert_eq!(p.pre, w("0;2,1"));
        assert_eq!(p.period, vec![2, 2, 1, 1]);
        assert_eq!(p.to_string(), "0;2,1,(2,2,1,1)");
        let q: PeriodicWord = "1;(1)".parse().unwrap();
        assert_eq!(q.to_string(), "1;(1)");
        assert!("1,(0)".parse::<PeriodicWord>().is_err());
        assert!("1,2".parse::<PeriodicWord>().is_err());
        assert!("1,x".parse::<Word>().is_err());
        assert!(Word::new(vec![1, 0]).is_err());
    }
}
