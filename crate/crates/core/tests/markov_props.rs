use std::collections::BTreeSet;

use dashu::integer::UBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectra_core::cf::QuadraticSurd;
use spectra_core::markov::{
    descend, enumerate_triples, is_markov_triple, mod_p_graph, spectrum_points, vieta, MarkovTriple, Move,
};

fn u(n: u64) -> UBig {
    UBig::from(n)
}

/// All solutions with x ≤ y ≤ z ≤ bound, solving the quadratic in z.
fn brute_force(bound: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    for x in 1..=bound {
        for y in x..=bound {
            let disc = 9 * x * x * y * y - 4 * (x * x + y * y);
            let s = (disc as f64).sqrt() as u64;
            for r in s.saturating_sub(2)..=s + 2 {
                if r * r == disc && (3 * x * y + r) % 2 == 0 {
                    for z in [(3 * x * y + r) / 2, (3 * x * y).saturating_sub(r) / 2] {
                        if z >= y && z <= bound && x * x + y * y + z * z == 3 * x * y * z {
                            out.insert((x, y, z));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn tree_is_complete_up_to_1000() {
    for bound in [1, 2, 30, 200, 1000] {
        let tree: BTreeSet<(u64, u64, u64)> = enumerate_triples(&u(bound))
            .iter()
            .map(|t| {
                let f = |x: &UBig| u64::try_from(x).unwrap();
                (f(t.x()), f(t.y()), f(t.z()))
            })
            .collect();
        assert_eq!(tree, brute_force(bound), "bound {bound}");
    }
}

#[test]
fn enumeration_is_self_consistent_to_a_million() {
    let all = enumerate_triples(&u(1_000_000));
    let distinct: BTreeSet<_> = all.iter().collect();
    assert_eq!(distinct.len(), all.len());
    for t in &all {
        assert!(is_markov_triple(&t.to_array()));
        let path = descend(t);
        assert_eq!(path.replay().unwrap(), MarkovTriple::root().to_array());
    }
}

#[test]
fn fibonacci_family() {
    let mut fib = vec![u(0), u(1)];
    while fib.len() < 64 {
        let n = fib.len();
        fib.push(&fib[n - 1] + &fib[n - 2]);
    }
    for m in 1..=30 {
        let t = [u(1), fib[2 * m - 1].clone(), fib[2 * m + 1].clone()];
        assert!(is_markov_triple(&t), "m = {m}");
    }
}

#[test]
fn random_walks_preserve_the_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut node = MarkovTriple::root().to_array();
    for _ in 0..10_000 {
        for c in 1..=3 {
            assert!(is_markov_triple(&vieta(&node, c).unwrap()));
        }
        for p in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0]] {
            assert!(is_markov_triple(&Move::Permute(p).apply(&node).unwrap()));
        }
        // wander, but come home before the numbers get silly
        node = if node.iter().max().unwrap() > &u(1 << 40) {
            MarkovTriple::root().to_array()
        } else {
            vieta(&node, rng.random_range(1..=3)).unwrap()
        };
    }
}

#[test]
fn descent_strictly_decreases() {
    for t in enumerate_triples(&u(100_000_000)) {
        let mut cur = t.to_array();
        for m in descend(&t).moves {
            let next = m.apply(&cur).unwrap();
            if matches!(m, Move::Vieta(_)) {
                assert!(next.iter().max() < cur.iter().max());
            }
            cur = next;
        }
    }
}

#[test]
fn spectrum_points_below_three() {
    let pts = spectrum_points(5);
    let surd = |d: u64, r: i64| QuadraticSurd::sqrt(u(d)).div(&QuadraticSurd::from_int(r)).unwrap();
    assert_eq!(
        pts,
        vec![surd(5, 1), surd(8, 1), surd(221, 5), surd(1517, 13), surd(7565, 29)]
    );
    let many = spectrum_points(40);
    assert!(many.windows(2).all(|w| w[0] < w[1]));
    assert!(many.iter().all(|x| *x < QuadraticSurd::from_int(3)));
}

#[test]
fn small_mod_p_graphs_are_connected() {
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let g = mod_p_graph(p).unwrap();
        assert!(g.is_connected(), "p = {p}: {}", g.report());
    }
}
