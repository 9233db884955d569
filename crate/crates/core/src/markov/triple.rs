use std::fmt;

use dashu::integer::UBig;

use crate::error::{Error, Result};

/// `x² + y² + z² = 3xyz` for an unordered triple.
pub fn is_markov_triple(t: &[UBig; 3]) -> bool {
    let [x, y, z] = t;
    x * x + y * y + z * z == UBig::from(3u8) * x * y * z
}

fn check(t: &[UBig; 3]) -> Result<()> {
    if is_markov_triple(t) && t.iter().all(|c| *c > UBig::ZERO) {
        Ok(())
    } else {
        Err(Error::NotMarkovTriple(
            t[0].to_string(),
            t[1].to_string(),
            t[2].to_string(),
        ))
    }
}

/// Replaces coordinate `coord` (1, 2 or 3) of a solution by
/// `3 · (product of the other two) − c`, the other root of the quadratic.
pub fn vieta(t: &[UBig; 3], coord: usize) -> Result<[UBig; 3]> {
    if !(1..=3).contains(&coord) {
        return Err(Error::InvalidArgument(format!("coordinate {coord} not in 1..=3")));
    }
    check(t)?;
    let i = coord - 1;
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let mut out = t.clone();
    // For a positive solution the other root is (a² + b²)/c > 0, so this
    // never underflows.
    out[i] = UBig::from(3u8) * &t[j] * &t[k] - &t[i];
    Ok(out)
}

/// A positive solution of the Markov–Hurwitz equation with `x ≤ y ≤ z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkovTriple {
    x: UBig,
    y: UBig,
    z: UBig,
}

impl MarkovTriple {
    /// Validates and sorts.
    pub fn new(a: impl Into<UBig>, b: impl Into<UBig>, c: impl Into<UBig>) -> Result<Self> {
        Self::from_array([a.into(), b.into(), c.into()])
    }

    pub fn from_array(mut t: [UBig; 3]) -> Result<Self> {
        check(&t)?;
        t.sort();
        let [x, y, z] = t;
        Ok(MarkovTriple { x, y, z })
    }

    pub fn root() -> Self {
        MarkovTriple {
            x: UBig::ONE,
            y: UBig::ONE,
            z: UBig::ONE,
        }
    }

    pub fn x(&self) -> &UBig {
        &self.x
    }

    pub fn y(&self) -> &UBig {
        &self.y
    }

    /// The Markov number of the triple.
    pub fn z(&self) -> &UBig {
        &self.z
    }

    pub fn to_array(&self) -> [UBig; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn is_root(&self) -> bool {
        *self == Self::root()
    }

    /// The two children `(y, z, 3yz − x)` and `(x, z, 3xz − y)`, re-sorted.
    pub fn children(&self) -> [MarkovTriple; 2] {
        let three = UBig::from(3u8);
        let sorted = |mut t: [UBig; 3]| {
            t.sort();
            let [x, y, z] = t;
            MarkovTriple { x, y, z }
        };
        [
            sorted([self.y.clone(), self.z.clone(), &three * &self.y * &self.z - &self.x]),
            sorted([self.x.clone(), self.z.clone(), &three * &self.x * &self.z - &self.y]),
        ]
    }

    /// The parent `(x, y, 3xy − z)`, re-sorted; `None` at the root.
    pub fn parent(&self) -> Option<MarkovTriple> {
        if self.is_root() {
            return None;
        }
        let t = vieta(&self.to_array(), 3).expect("valid triple");
        Some(MarkovTriple::from_array(t).expect("Vieta preserves solutions"))
    }
}

impl fmt::Display for MarkovTriple {
    /// CSV row `x,y,z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

/// One step of a descent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Vieta involution on coordinate 1, 2 or 3.
    Vieta(u8),
    /// Reorders the coordinates: new `t[i]` is old `t[perm[i]]`.
    Permute([u8; 3]),
}

impl Move {
    pub fn apply(&self, t: &[UBig; 3]) -> Result<[UBig; 3]> {
        match *self {
            Move::Vieta(c) => vieta(t, c as usize),
            Move::Permute(p) => Ok(p.map(|i| t[i as usize].clone())),
        }
    }
}

/// A certified route from a triple down to `(1, 1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentPath {
    pub start: MarkovTriple,
    pub moves: Vec<Move>,
}

impl DescentPath {
    pub fn vieta_steps(&self) -> usize {
        self.moves.iter().filter(|m| matches!(m, Move::Vieta(_))).count()
    }

    /// Replays the path, checking that every Vieta step strictly lowers the
    /// maximum coordinate; returns the final triple.
    pub fn replay(&self) -> Result<[UBig; 3]> {
        let mut t = self.start.to_array();
        for m in &self.moves {
            let next = m.apply(&t)?;
            if matches!(m, Move::Vieta(_)) && next.iter().max() >= t.iter().max() {
                return Err(Error::InvalidArgument(format!("step {m:?} does not descend")));
            }
            t = next;
        }
        Ok(t)
    }
}

/// Descends by replacing the largest coordinate and re-sorting, until the
/// fundamental solution is reached.
pub fn descend(t: &MarkovTriple) -> DescentPath {
    let mut moves = Vec::new();
    let mut cur = t.to_array();
    while cur != MarkovTriple::root().to_array() {
        cur = vieta(&cur, 3).expect("valid triple");
        moves.push(Move::Vieta(3));
        let mut perm = [0u8, 1, 2];
        perm.sort_by(|&a, &b| cur[a as usize].cmp(&cur[b as usize]));
        if perm != [0, 1, 2] {
            let m = Move::Permute(perm);
            cur = m.apply(&cur).expect("permutation");
            moves.push(m);
        }
    }
    DescentPath {
        start: t.clone(),
        moves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(x: u32, y: u32, z: u32) -> [UBig; 3] {
        [x.into(), y.into(), z.into()]
    }

    #[test]
    fn vieta_examples() {
        assert_eq!(vieta(&arr(1, 2, 5), 3).unwrap(), arr(1, 2, 1));
        assert_eq!(vieta(&arr(1, 1, 1), 3).unwrap(), arr(1, 1, 2));
        assert!(vieta(&arr(1, 2, 3), 1).is_err());
        assert!(vieta(&arr(1, 1, 1), 4).is_err());
        for c in 1..=3 {
            let t = arr(2, 5, 29);
            assert_eq!(vieta(&vieta(&t, c).unwrap(), c).unwrap(), t);
        }
    }

    #[test]
    fn descent_examples() {
        let root = MarkovTriple::root();
        assert!(descend(&root).moves.is_empty());
        let p = descend(&MarkovTriple::new(1u8, 1u8, 2u8).unwrap());
        assert_eq!(p.moves, vec![Move::Vieta(3)]);
        assert_eq!(p.replay().unwrap(), arr(1, 1, 1));
        let p = descend(&MarkovTriple::new(2u8, 5u8, 29u8).unwrap());
        assert!(p.vieta_steps() >= 2);
        assert_eq!(p.replay().unwrap(), arr(1, 1, 1));
    }

    #[test]
    fn construction_validates_and_sorts() {
        let t = MarkovTriple::new(29u8, 2u8, 5u8).unwrap();
        assert_eq!(t.to_string(), "2,5,29");
        assert!(MarkovTriple::new(1u8, 2u8, 3u8).is_err());
        assert!(MarkovTriple::new(0u8, 0u8, 0u8).is_err());
    }
}
