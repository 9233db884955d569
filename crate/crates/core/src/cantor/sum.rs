use std::cmp::Ordering;
use std::collections::BTreeMap;

use dashu::rational::RBig;

use super::cylinder::{level_count, GaussCantorSpec};
use crate::cf::Digit;
use crate::error::{check_budget, Error, Result};
use crate::par;

/// Unreduced fraction with positive denominator, compared by value.
///
/// Cylinder endpoints at desk-scale depths have denominators far below
/// `2^31`, so cross products of sums stay well inside `i128`; the caller
/// checks this bound before any arithmetic happens.
#[derive(Clone, Copy, Debug)]
struct Frac {
    n: i128,
    d: i128,
}

impl Frac {
    fn add(self, o: Frac) -> Frac {
        Frac {
            n: self.n * o.d + o.n * self.d,
            d: self.d * o.d,
        }
    }

    fn to_rational(self) -> RBig {
        RBig::from_parts_signed(self.n.into(), self.d.into())
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Frac {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.n * o.d).cmp(&(o.n * self.d))
    }
}

/// A finite union of closed intervals, kept merged.
#[derive(Default)]
struct Union {
    parts: BTreeMap<Frac, Frac>,
}

impl Union {
    fn contains(&self, lo: Frac, hi: Frac) -> bool {
        match self.parts.range(..=lo).next_back() {
            Some((_, &h)) => hi <= h,
            None => false,
        }
    }

    fn insert(&mut self, mut lo: Frac, mut hi: Frac) {
        if let Some((&l, &h)) = self.parts.range(..=lo).next_back() {
            if h >= lo {
                lo = l;
                hi = hi.max(h);
                self.parts.remove(&l);
            }
        }
        let absorbed: Vec<(Frac, Frac)> = self.parts.range(lo..=hi).map(|(&l, &h)| (l, h)).collect();
        for (l, h) in absorbed {
            hi = hi.max(h);
            self.parts.remove(&l);
        }
        self.parts.insert(lo, hi);
    }
}

#[derive(Clone, Copy)]
struct Node {
    p: i128,
    p_prev: i128,
    q: i128,
    q_prev: i128,
}

impl Node {
    fn root(prefix: &[Digit]) -> Node {
        let mut n = Node {
            p: 0,
            p_prev: 1,
            q: 1,
            q_prev: 0,
        };
        for &d in prefix {
            n = n.push(d);
        }
        n
    }

    fn push(self, d: Digit) -> Node {
        let a = d as i128;
        Node {
            p: a * self.p + self.p_prev,
            p_prev: self.p,
            q: a * self.q + self.q_prev,
            q_prev: self.q,
        }
    }

    fn extend(self, word: &[Digit]) -> Node {
        word.iter().fold(self, |n, &d| n.push(d))
    }

    fn bounds(self) -> (Frac, Frac) {
        let a = Frac { n: self.p, d: self.q };
        let b = Frac {
            n: self.p + self.p_prev,
            d: self.q + self.q_prev,
        };
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Merged outer cover of `K(A) + K(B)` at level `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumCover {
    pub level: usize,
    /// Maximal disjoint closed intervals, increasing.
    pub intervals: Vec<(RBig, RBig)>,
    /// Number of level-`m` cylinder pairs actually summed.
    pub leaves: u64,
    /// Number of cylinder pairs inspected, including pruned ones.
    pub visited: u64,
}

impl SumCover {
    pub fn hull(&self) -> (RBig, RBig) {
        (
            self.intervals.first().expect("nonempty").0.clone(),
            self.intervals.last().expect("nonempty").1.clone(),
        )
    }

    pub fn measure(&self) -> RBig {
        self.intervals.iter().fold(RBig::ZERO, |acc, (a, b)| acc + (b - a))
    }

    pub fn contains(&self, x: &RBig) -> bool {
        self.intervals.iter().any(|(a, b)| a <= x && x <= b)
    }
}

/// Upper bound on the last denominator of any level-`m` cylinder.
fn denominator_bound(spec: &GaussCantorSpec, m: usize) -> f64 {
    let block = spec
        .set
        .words()
        .iter()
        .map(|w| w.iter().map(|&d| (d + 1) as f64).product::<f64>())
        .fold(1.0, f64::max);
    let prefix: f64 = spec.prefix.iter().map(|&d| (d + 1) as f64).product();
    prefix * block.powi(m as i32)
}

struct Search<'a> {
    a: &'a [Vec<Digit>],
    b: &'a [Vec<Digit>],
    m: usize,
    union: Union,
    leaves: u64,
    visited: u64,
}

impl Search<'_> {
    fn descend(&mut self, x: Node, y: Node, depth: usize) {
        self.visited += 1;
        let (xl, xh) = x.bounds();
        let (yl, yh) = y.bounds();
        let (lo, hi) = (xl.add(yl), xh.add(yh));
        // Every deeper pair sums into this interval: nothing new can come of it.
        if self.union.contains(lo, hi) {
            return;
        }
        if depth == self.m {
            self.leaves += 1;
            self.union.insert(lo, hi);
            return;
        }
        for wa in self.a {
            for wb in self.b {
                self.descend(x.extend(wa), y.extend(wb), depth + 1);
            }
        }
    }
}

/// Union of `I(u) + I(v)` over all level-`m` cylinders `u` of `A` and `v` of
/// `B`, merged into maximal intervals.
///
/// Pairs are explored depth first; a pair whose sum already lies inside the
/// union found so far is skipped with its whole subtree, which leaves the
/// union unchanged. Top-level pairs are searched in parallel and their
/// unions merged, so the output does not depend on scheduling.
pub fn sum_cover(a: &GaussCantorSpec, b: &GaussCantorSpec, m: usize, budget: u128) -> Result<SumCover> {
    if m == 0 {
        return Err(Error::InvalidArgument("cover level must be at least 1".into()));
    }
    check_budget(level_count(&a.set, m).max(level_count(&b.set, m)), budget)?;
    let q_max = denominator_bound(a, m).max(denominator_bound(b, m));
    if q_max > 1e9 {
        return Err(Error::InvalidArgument(format!(
            "level {m} is too deep for exact sum covers (denominators up to {q_max:.1e})"
        )));
    }
    let (ra, rb) = (Node::root(&a.prefix), Node::root(&b.prefix));
    let (wa, wb) = (a.set.words(), b.set.words());
    let tops: Vec<(usize, usize)> = (0..wa.len()).flat_map(|i| (0..wb.len()).map(move |j| (i, j))).collect();
    let parts = par::map(&tops, |&(i, j)| {
        let mut s = Search {
            a: wa,
            b: wb,
            m,
            union: Union::default(),
            leaves: 0,
            visited: 0,
        };
        s.descend(ra.extend(&wa[i]), rb.extend(&wb[j]), 1);
        (s.union, s.leaves, s.visited)
    });
    let mut union = Union::default();
    let (mut leaves, mut visited) = (0, 0);
    for (u, l, v) in parts {
        for (lo, hi) in u.parts {
            union.insert(lo, hi);
        }
        leaves += l;
        visited += v;
    }
    Ok(SumCover {
        level: m,
        intervals: union
            .parts
            .into_iter()
            .map(|(l, h)| (l.to_rational(), h.to_rational()))
            .collect(),
        leaves,
        visited,
    })
}
