use std::fmt;
use std::str::FromStr;

use crate::cf::{Digit, Word};
use crate::error::{Error, Result};

/// A finite primitive set of nonempty words: no element is a prefix of
/// another, so concatenations decode uniquely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordSet {
    words: Vec<Vec<Digit>>,
}

fn show(w: &[Digit]) -> String {
    let body: Vec<String> = w.iter().map(|d| d.to_string()).collect();
    format!("({})", body.join(","))
}

impl WordSet {
    pub fn new(words: Vec<Vec<Digit>>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyWordSet);
        }
        for w in &words {
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            if w.contains(&0) {
                return Err(Error::ZeroDigit);
            }
        }
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                if i != j && b.starts_with(a) {
                    return Err(Error::NotPrimitive {
                        prefix: show(a),
                        word: show(b),
                    });
                }
            }
        }
        Ok(WordSet { words })
    }

    /// `{1, 2, ..., n}`: the set whose Gauss–Cantor set is `C(n)`.
    pub fn alphabet(n: Digit) -> Self {
        WordSet::new((1..=n).map(|d| vec![d]).collect()).expect("single digits are primitive")
    }

    pub fn words(&self) -> &[Vec<Digit>] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn max_digit(&self) -> Digit {
        self.words.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Reverses every word. The result can fail to be primitive (`{1, 21}`
    /// transposes to `{1, 12}`), hence the `Result`.
    pub fn transpose(&self) -> Result<WordSet> {
        WordSet::new(self.words.iter().map(|w| w.iter().rev().copied().collect()).collect())
    }
}

/// Free-function form of [`WordSet::transpose`].
pub fn transpose(b: &WordSet) -> Result<WordSet> {
    b.transpose()
}

impl fmt::Display for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if w.len() == 1 {
                write!(f, "{}", w[0])?;
            } else {
                f.write_str(&show(w))?;
            }
        }
        Ok(())
    }
}

impl FromStr for WordSet {
    type Err = Error;

    /// Parses `"1,2"` (single-digit words) or `"(1,1),(2,2)"`, or a mix such
    /// as `"1,(2,1)"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if let Some(inner) = rest.strip_prefix('(') {
                let (body, tail) = inner.split_once(')').ok_or_else(|| Error::parse(s, "unclosed '('"))?;
                words.push(Word::from_str(body).map_err(|_| Error::parse(s, "bad word"))?);
                rest = tail.trim_start();
            } else {
                let (tok, tail) = rest.split_once(',').unwrap_or((rest, ""));
                words.push(Word::from_str(tok).map_err(|_| Error::parse(s, "bad digit"))?);
                rest = tail.trim_start();
                continue;
            }
            rest = match rest.strip_prefix(',') {
                Some(t) => t.trim_start(),
                None if rest.is_empty() => rest,
                None => return Err(Error::parse(s, "expected ',' between words")),
            };
        }
        let words = words
            .into_iter()
            .map(|w| {
                if w.head().is_some() {
                    Err(Error::parse(s, "word set entries take no ';' head"))
                } else {
                    Ok(w.digits().to_vec())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        WordSet::new(words).map_err(|e| match e {
            Error::EmptyWordSet | Error::EmptyWord => Error::parse(s, e.to_string()),
            other => other,
        })
    }
}
