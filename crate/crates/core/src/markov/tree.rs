use std::collections::BTreeSet;

use dashu::integer::UBig;

use super::triple::MarkovTriple;
use crate::cf::QuadraticSurd;
use crate::par;

/// Constant of the asymptotic `M(x) ~ c (log 3x)²` for the number of Markov
/// numbers up to `x`.
pub const ZAGIER_C: f64 = 0.180717104711507;

/// All Markov triples with `z ≤ bound`, sorted by `(z, y, x)`.
///
/// Breadth-first over the tree rooted at `(1, 1, 1)`; each level is expanded
/// in parallel and merged through an ordered set, so the result does not
/// depend on scheduling.
pub fn enumerate_triples(bound: &UBig) -> Vec<MarkovTriple> {
    let mut seen = BTreeSet::new();
    let mut level = vec![MarkovTriple::root()];
    if bound < &UBig::ONE {
        return Vec::new();
    }
    seen.insert(MarkovTriple::root());
    while !level.is_empty() {
        let children = par::flat_map(&level, |t| {
            t.children().into_iter().filter(|c| c.z() <= bound).collect::<Vec<_>>()
        });
        level = children.into_iter().filter(|c| seen.insert(c.clone())).collect();
    }
    let mut out: Vec<MarkovTriple> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.z(), a.y(), a.x()).cmp(&(b.z(), b.y(), b.x())));
    out
}

/// Distinct Markov numbers up to `bound`, increasing.
pub fn markov_numbers(bound: &UBig) -> Vec<UBig> {
    let zs: BTreeSet<UBig> = enumerate_triples(bound).into_iter().map(|t| t.z().clone()).collect();
    zs.into_iter().collect()
}

/// The first `n` values `√(9 − 4/z²) = √(9z² − 4)/z` of the Markov spectrum
/// below 3, as exact surds.
pub fn spectrum_points(n: usize) -> Vec<QuadraticSurd> {
    let mut bound = UBig::from(64u8);
    let mut zs = markov_numbers(&bound);
    while zs.len() < n {
        bound = &bound * &bound;
        zs = markov_numbers(&bound);
    }
    zs.truncate(n);
    zs.into_iter()
        .map(|z| {
            let rad = QuadraticSurd::sqrt(UBig::from(9u8) * &z * &z - UBig::from(4u8));
            rad.div(&QuadraticSurd::from_rational(&z.into())).expect("z > 0")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZagierCount {
    /// Number of distinct Markov numbers `≤ x`.
    pub count: usize,
    /// `c · (log 3x)²`.
    pub reference: f64,
}

impl ZagierCount {
    pub fn ratio(&self) -> f64 {
        self.count as f64 / self.reference
    }
}

pub fn zagier_count(x: &UBig) -> ZagierCount {
    let count = markov_numbers(x).len();
    let l = (3.0 * x.to_f64().value()).ln();
    ZagierCount {
        count,
        reference: ZAGIER_C * l * l,
    }
}

/// Whether any Markov number up to the bound is the largest entry of more
/// than one triple. Reported, never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub triples: usize,
    pub distinct_numbers: usize,
    pub repeated: Vec<UBig>,
}

impl FrobeniusReport {
    pub fn unique(&self) -> bool {
        self.repeated.is_empty()
    }
}

pub fn frobenius_report(bound: &UBig) -> FrobeniusReport {
    let triples = enumerate_triples(bound);
    let mut repeated = Vec::new();
    for pair in triples.windows(2) {
        if pair[0].z() == pair[1].z() && repeated.last() != Some(pair[0].z()) {
            repeated.push(pair[0].z().clone());
        }
    }
    let distinct: BTreeSet<&UBig> = triples.iter().map(|t| t.z()).collect();
    FrobeniusReport {
        triples: triples.len(),
        distinct_numbers: distinct.len(),
        repeated,
    }
}
