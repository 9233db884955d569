use crate::cf::Digit;
use crate::error::{check_budget, Error, Result};
use crate::interval::Interval;
use crate::par;

/// `[0; t1, t2, ...]` over all tails with digits in `1..=a`.
pub(crate) fn tail(a: Digit) -> Interval {
    Interval::new((1.0 / (a as f64 + 1.0)).next_down(), 1.0)
}

/// `f` at position `i` of `w`, over every extension of `w` by digits `≤ a`.
pub(crate) fn height_at(w: &[Digit], i: usize, a: Digit) -> Interval {
    let t = tail(a);
    let right = w[i + 1..].iter().rev().fold(t, |y, &d| y.cf_step(d));
    let left = w[..i].iter().fold(t, |y, &d| y.cf_step(d));
    Interval::point(w[i] as f64) + right + left
}

/// Largest certified lower bound among positions other than `c`, skipping
/// positions that cannot reach `bar` since `f < digit + 2`.
fn best_rival(w: &[Digit], c: usize, a: Digit, bar: f64) -> f64 {
    (0..w.len())
        .filter(|&j| j != c && w[j] as f64 + 2.0 > bar)
        .map(|j| height_at(w, j, a).lo)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Values `sup_j f(σʲx)` can take when the supremum sits at the center of the
/// window `w` (length `2N + 1`) and all digits are at most `a`.
///
/// Such a value equals `f` at the center, so it lies below the center's upper
/// bound, and it dominates every other position, so it lies above each of
/// their lower bounds. `None` means no extension has its supremum at the
/// center.
pub fn cylinder_markov_bounds(w: &[Digit], a: Digit) -> Result<Option<Interval>> {
    if w.len() % 2 == 0 {
        return Err(Error::InvalidArgument("window length must be odd".into()));
    }
    if w.contains(&0) {
        return Err(Error::ZeroDigit);
    }
    if let Some(d) = w.iter().find(|&&d| d > a) {
        return Err(Error::InvalidArgument(format!("digit {d} exceeds alphabet bound {a}")));
    }
    Ok(center_bounds(w, w.len() / 2, a))
}

fn center_bounds(w: &[Digit], c: usize, a: Digit) -> Option<Interval> {
    let center = height_at(w, c, a);
    let lo = center.lo.max(best_rival(w, c, a, center.hi));
    (lo <= center.hi).then(|| Interval::new(lo, center.hi))
}

/// Windows of radius `n` whose center can realise a value in `[lo, hi]`.
pub(crate) struct WindowSearch {
    pub lo: f64,
    pub hi: f64,
    pub alphabet: Digit,
    pub radius: usize,
    pub budget: u128,
}

/// Partial window, grown right then left around a fixed center.
#[derive(Clone)]
struct Node {
    digits: Vec<Digit>,
    center: usize,
}

impl Node {
    fn radius_done(&self, n: usize) -> bool {
        self.center == n && self.digits.len() == 2 * n + 1
    }

    fn grow_right(&self) -> bool {
        // right side leads by at most one digit
        self.digits.len() - 1 - self.center == self.center
    }

    fn child(&self, d: Digit) -> Node {
        let mut n = self.clone();
        if self.grow_right() {
            n.digits.push(d);
        } else {
            n.digits.insert(0, d);
            n.center += 1;
        }
        n
    }
}

#[derive(Default)]
pub(crate) struct SearchStats {
    pub pieces: Vec<Interval>,
    pub nodes: u128,
    pub over_budget: bool,
}

impl WindowSearch {
    fn viable(&self, node: &Node) -> Option<Interval> {
        let b = center_bounds(&node.digits, node.center, self.alphabet)?;
        (b.hi >= self.lo && b.lo <= self.hi).then_some(b)
    }

    fn descend(&self, node: Node, out: &mut SearchStats) {
        if out.over_budget {
            return;
        }
        out.nodes += 1;
        if out.nodes > self.budget {
            out.over_budget = true;
            return;
        }
        let Some(b) = self.viable(&node) else { return };
        if node.radius_done(self.radius) {
            out.pieces.push(Interval::new(b.lo.max(self.lo), b.hi.min(self.hi)));
            return;
        }
        for d in 1..=self.alphabet {
            self.descend(node.child(d), out);
        }
    }

    /// All certified pieces, unmerged, in a deterministic order.
    pub fn run(&self) -> Result<(Vec<Interval>, u128)> {
        // seed with the center and its two neighbours so the parallel
        // fan-out has enough independent subtrees
        let mut seeds: Vec<Node> = (1..=self.alphabet)
            .map(|d| Node {
                digits: vec![d],
                center: 0,
            })
            .filter(|n| self.viable(n).is_some())
            .collect();
        for _ in 0..2.min(2 * self.radius) {
            seeds = seeds
                .iter()
                .flat_map(|n| (1..=self.alphabet).map(move |d| n.child(d)))
                .filter(|n| self.viable(n).is_some())
                .collect();
        }
        let parts = par::map(&seeds, |n| {
            let mut s = SearchStats::default();
            self.descend(n.clone(), &mut s);
            s
        });
        let nodes: u128 = parts.iter().map(|s| s.nodes).sum::<u128>() + seeds.len() as u128;
        if parts.iter().any(|s| s.over_budget) {
            return Err(Error::BudgetExceeded {
                needed: nodes.max(self.budget + 1),
                budget: self.budget,
            });
        }
        check_budget(nodes, self.budget)?;
        Ok((parts.into_iter().flat_map(|s| s.pieces).collect(), nodes))
    }
}

/// Sorted, disjoint union of closed intervals.
pub(crate) fn merge(mut pieces: Vec<Interval>) -> Vec<Interval> {
    pieces.sort_by(|x, y| x.lo.total_cmp(&y.lo).then(x.hi.total_cmp(&y.hi)));
    let mut out: Vec<Interval> = Vec::new();
    for p in pieces {
        match out.last_mut() {
            Some(last) if p.lo <= last.hi => last.hi = last.hi.max(p.hi),
            _ => out.push(p),
        }
    }
    out
}
