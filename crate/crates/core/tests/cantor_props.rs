use dashu::integer::UBig;
use dashu::rational::RBig;
use proptest::prelude::*;
use spectra_core::cantor::{
    cover, cylinder_interval, euler_denominator_check, palis_takens_bounds, sum_cover, CantorSystem, GaussCantorSpec,
    WordSet, DEFAULT_BUDGET,
};
use spectra_core::cf::{denominators_u128, QuadraticSurd};

fn gauss(b: &WordSet) -> CantorSystem {
    CantorSystem::Gauss(GaussCantorSpec::new(b.clone()))
}

fn c(n: u64) -> GaussCantorSpec {
    GaussCantorSpec::new(WordSet::alphabet(n))
}

fn all_words(alphabet: u64, max_len: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut level = vec![vec![]];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |d| {
                    let mut v: Vec<u64> = w.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

#[test]
fn interval_length_formula() {
    for w in all_words(3, 8).into_iter().chain(all_words(2, 12)) {
        let (q, qp) = denominators_u128(&w).unwrap();
        let len = cylinder_interval(&w).unwrap().length();
        assert_eq!(len * RBig::from(UBig::from(q * (q + qp))), RBig::ONE, "{w:?}");
    }
}

#[test]
fn euler_transpose_denominators() {
    for w in all_words(2, 10) {
        assert!(euler_denominator_check(&w).unwrap().equal(), "{w:?}");
    }
}

#[test]
fn covers_are_disjoint_and_nested() {
    for b in ["1,2", "(1,1),(2,2)", "1,(2,1),(2,2)", "2,3,4"] {
        let spec = GaussCantorSpec::new(b.parse().unwrap());
        let mut prev = cover(&spec, 1, DEFAULT_BUDGET).unwrap();
        for m in 2..=5 {
            let mut cur = cover(&spec, m, DEFAULT_BUDGET).unwrap();
            for child in &cur {
                let parent = prev.iter().find(|p| child.word.starts_with(&p.word)).unwrap();
                assert!(parent.lo <= child.lo && child.hi <= parent.hi);
                assert!(child.lo <= child.hi);
            }
            cur.sort_by(|x, y| x.lo.cmp(&y.lo));
            for pair in cur.windows(2) {
                assert!(pair[0].hi <= pair[1].lo, "{b} level {m}");
            }
            prev = cur;
        }
    }
}

#[test]
fn non_primitive_sets_are_rejected() {
    assert!("1,(1,2)".parse::<WordSet>().is_err());
}

#[test]
fn bounds_tighten_for_c2() {
    let sys = gauss(&WordSet::alphabet(2));
    let mut last: Option<spectra_core::cantor::DimBounds> = None;
    for m in 2..=10 {
        let b = palis_takens_bounds(&sys, m, 1, DEFAULT_BUDGET).unwrap();
        assert!(b.alpha <= b.beta);
        if let Some(p) = last {
            assert!(b.width() < p.width(), "m = {m}");
            assert!(b.alpha >= p.alpha - 1e-12 && b.beta <= p.beta + 1e-12);
        }
        last = Some(b);
    }
}

#[test]
fn prefix_does_not_change_bounds() {
    let b = WordSet::alphabet(2);
    let plain = palis_takens_bounds(&gauss(&b), 6, 1, DEFAULT_BUDGET).unwrap();
    let spec = GaussCantorSpec::with_prefix(vec![3, 1, 4], b).unwrap();
    let shifted = palis_takens_bounds(&CantorSystem::Gauss(spec), 6, 1, DEFAULT_BUDGET).unwrap();
    assert_eq!(plain, shifted);
}

#[test]
fn hall_sum_fills_its_interval() {
    let s = sum_cover(&c(4), &c(4), 6, DEFAULT_BUDGET).unwrap();
    let (lo, hi) = s.hull();
    let r2 = QuadraticSurd::sqrt(UBig::from(2u8)).to_f64() - 1.0;
    assert!((lo.to_f64().value() - r2).abs() < 1e-4);
    assert!((hi.to_f64().value() - 4.0 * r2).abs() < 1e-4);
    assert_eq!(s.intervals.len(), 1);
}

#[test]
fn c2_sum_matches_brute_force_oracle() {
    // Oracle: merged Minkowski sums of all 64 x 64 level-6 cylinders, computed
    // with Python fractions. Levels 4, 6, 8 give 5, 38, 352 pieces.
    for (m, pieces, ratio) in [
        (4, 5, 0.8174538415618454),
        (6, 38, 0.6742739695713869),
        (8, 352, 0.5738806690157389),
    ] {
        let s = sum_cover(&c(2), &c(2), m, DEFAULT_BUDGET).unwrap();
        let (lo, hi) = s.hull();
        assert_eq!(s.intervals.len(), pieces);
        let got = (s.measure() / (hi - lo)).to_f64().value();
        assert!((got - ratio).abs() < 1e-12, "m = {m}: {got}");
    }
}

#[test]
fn sum_of_points_shrinks_onto_the_point_sum() {
    let (a, b) = (
        GaussCantorSpec::new("1".parse().unwrap()),
        GaussCantorSpec::new("2".parse().unwrap()),
    );
    let target = (5f64.sqrt() - 1.0) / 2.0 + 2f64.sqrt() - 1.0;
    let mut width = f64::INFINITY;
    for m in [2, 4, 8, 16] {
        let s = sum_cover(&a, &b, m, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.intervals.len(), 1);
        let (lo, hi) = s.hull();
        let (lo, hi) = (lo.to_f64().value(), hi.to_f64().value());
        assert!(lo <= target && target <= hi);
        assert!(hi - lo < width);
        width = hi - lo;
    }
    assert!(width < 1e-6);
}

fn primitive_set() -> impl Strategy<Value = WordSet> {
    prop::collection::vec(prop::collection::vec(1u64..=4, 1..=3), 2..=4).prop_filter_map(
        "primitive with primitive transpose",
        |words| {
            let b = WordSet::new(words).ok()?;
            b.transpose().ok()?;
            Some(b)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transpose_bounds_overlap(b in primitive_set()) {
        let t = b.transpose().unwrap();
        prop_assert_eq!(t.transpose().unwrap(), b.clone());
        // keep the cover size at desk scale
        let m = (1..=8).rev().find(|&m| (b.len() as u64).pow(m as u32) <= 1 << 14).unwrap().max(6);
        let x = palis_takens_bounds(&gauss(&b), m, 1, DEFAULT_BUDGET).unwrap();
        let y = palis_takens_bounds(&gauss(&t), m, 1, DEFAULT_BUDGET).unwrap();
        prop_assert!(x.alpha <= y.beta && y.alpha <= x.beta, "{x:?} vs {y:?}");
    }
}
