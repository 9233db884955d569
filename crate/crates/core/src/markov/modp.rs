use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::par;

pub type Point = [u32; 3];

/// The graph on nonzero solutions of `x² + y² + z² = 3xyz` over `F_p`, with
/// edges from the three Vieta involutions and the coordinate transpositions.
#[derive(Clone, Debug)]
pub struct ModPGraph {
    pub p: u32,
    pub vertices: Vec<Point>,
    /// Component label of each vertex (the smallest vertex index in it).
    pub component: Vec<usize>,
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
}

/// The report row `p,num_vertices,num_components,largest`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPReport {
    pub p: u32,
    pub num_vertices: usize,
    pub num_components: usize,
    pub largest: usize,
}

impl fmt::Display for ModPReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.p, self.num_vertices, self.num_components, self.largest
        )
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn on_surface(p: u64, [x, y, z]: [u64; 3]) -> bool {
    (x * x + y * y + z * z) % p == (3 * x % p * y % p * z) % p
}

impl ModPGraph {
    /// Neighbours of `v` under the three Vieta moves and three transpositions.
    pub fn moves(&self, v: Point) -> [Point; 6] {
        let p = self.p as u64;
        let [x, y, z] = v.map(|c| c as u64);
        let flip = |c: u64, a: u64, b: u64| ((3 * a % p * b % p + p - c) % p) as u32;
        [
            [flip(x, y, z), v[1], v[2]],
            [v[0], flip(y, x, z), v[2]],
            [v[0], v[1], flip(z, x, y)],
            [v[1], v[0], v[2]],
            [v[2], v[1], v[0]],
            [v[0], v[2], v[1]],
        ]
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() == 1
    }

    pub fn report(&self) -> ModPReport {
        ModPReport {
            p: self.p,
            num_vertices: self.vertices.len(),
            num_components: self.component_sizes.len(),
            largest: self.component_sizes.first().copied().unwrap_or(0),
        }
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Builds the graph for a prime `p ≥ 3` by brute force over `F_p³`.
pub fn mod_p_graph(p: u64) -> Result<ModPGraph> {
    if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    let rows = par::map_range(p as usize, |x| {
        let mut out = Vec::new();
        for y in 0..p {
            for z in 0..p {
                let v = [x as u64, y, z];
                if v != [0, 0, 0] && on_surface(p, v) {
                    out.push(v.map(|c| c as u32));
                }
            }
        }
        out
    });
    let vertices: Vec<Point> = rows.into_iter().flatten().collect();
    let index: HashMap<Point, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut g = ModPGraph {
        p: p as u32,
        vertices,
        component: Vec::new(),
        component_sizes: Vec::new(),
    };
    let mut parent: Vec<usize> = (0..g.vertices.len()).collect();
    for (i, &v) in g.vertices.iter().enumerate() {
        for w in g.moves(v) {
            let j = *index.get(&w).expect("moves preserve the surface");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..g.vertices.len()).map(|i| find(&mut parent, i)).collect();
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for &r in &roots {
        *sizes.entry(r).or_default() += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_values().collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    g.component = roots;
    g.component_sizes = sizes;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_by_hand() {
        // Over F_3 the equation forces x² + y² + z² = 0, i.e. all coordinates
        // nonzero: the 8 sign patterns.
        let g = mod_p_graph(3).unwrap();
        assert_eq!(g.vertices.len(), 8);
        assert!(g.is_connected());
        assert_eq!(g.report().to_string(), "3,8,1,8");
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(mod_p_graph(9).unwrap_err(), Error::NotPrime(9));
        assert!(mod_p_graph(2).is_err());
    }

    #[test]
    fn moves_are_involutions_on_vertices() {
        for p in [5, 7, 11, 13] {
            let g = mod_p_graph(p).unwrap();
            for &v in &g.vertices {
                for (k, w) in g.moves(v).into_iter().enumerate() {
                    assert!(on_surface(p, w.map(|c| c as u64)));
                    assert_eq!(g.moves(w)[k], v);
                }
            }
        }
    }
}
