use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use proptest::prelude::*;
use spectra_core::cf::{
    convergents, eval_periodic, expand_rational, lagrange_value, markov_value, perron_height, pow2,
    purely_periodic_value, EventuallyPeriodicSeq, PeriodicWord, PrecisionContext, QuadraticSurd, Word,
};

fn rat(p: i64, q: i64) -> RBig {
    RBig::from_parts_signed(IBig::from(p), IBig::from(q))
}

fn abs(x: RBig) -> RBig {
    if x < RBig::ZERO {
        -x
    } else {
        x
    }
}

#[test]
fn expansion_examples() {
    assert_eq!(expand_rational(355, 113).unwrap().to_string(), "3;7,16");
    assert_eq!(expand_rational(22, 7).unwrap().to_string(), "3;7");
    assert_eq!(expand_rational(1, 1).unwrap().to_string(), "1;");
    assert_eq!(expand_rational(-7, 3).unwrap().eval_finite().unwrap(), rat(-7, 3));
}

#[test]
fn convergent_examples() {
    let show = |w: &str| {
        let w: Word = w.parse().unwrap();
        convergents(&w)
            .unwrap()
            .iter()
            .map(|c| format!("{}/{}", c.p, c.q))
            .collect::<Vec<_>>()
    };
    assert_eq!(show("3;7,15,1"), ["3/1", "22/7", "333/106", "355/113"]);
    assert_eq!(show("0;2,2"), ["0/1", "1/2", "2/5"]);
    assert_eq!(show("5;"), ["5/1"]);
    assert!(convergents(&Word::new(vec![]).unwrap()).is_err());
}

#[test]
fn hurwitz_constant_for_golden_ratio() {
    // phi = [1; 1, 1, ...]; n = 20 is the 21st convergent.
    let phi = eval_periodic(&"1;".parse().unwrap(), &[1]).unwrap();
    let w = Word::with_head(1, vec![1; 20]).unwrap();
    let c = convergents(&w).unwrap().pop().unwrap();
    let phi_enc = phi.enclosure(200);
    let q = RBig::from(c.q.clone());
    let p = RBig::from(c.p.clone());
    let lo = abs(&q * &q * &phi_enc.lo - &q * &p);
    let hi = abs(&q * &q * &phi_enc.hi - &q * &p);
    let target = QuadraticSurd::sqrt(UBig::from(5u8)).recip().unwrap().to_f64();
    for x in [lo, hi] {
        assert!((x.to_f64().value() - target).abs() < 1e-6);
    }
}

#[test]
fn named_perron_facts() {
    let ctx = PrecisionContext::default();
    let sqrt = |n: u32| QuadraticSurd::sqrt(UBig::from(n));
    let ones: EventuallyPeriodicSeq = "((1))||((1))".parse().unwrap();
    let twos: EventuallyPeriodicSeq = "((2))||((2))".parse().unwrap();
    assert_eq!(markov_value(&ones, &ctx).unwrap().exact, Some(sqrt(5)));
    assert_eq!(markov_value(&twos, &ctx).unwrap().exact, Some(sqrt(8)));
    let p3 = EventuallyPeriodicSeq::periodic(vec![3]).unwrap();
    assert_eq!(markov_value(&p3, &ctx).unwrap().exact, Some(sqrt(13)));
    let p12 = EventuallyPeriodicSeq::periodic(vec![1, 2]).unwrap();
    assert_eq!(markov_value(&p12, &ctx).unwrap().exact, Some(sqrt(12)));
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=9, 1..=max_len)
}

fn seq_strategy() -> impl Strategy<Value = EventuallyPeriodicSeq> {
    let part = |lo: usize, hi: usize| prop::collection::vec(1u64..=4, lo..=hi);
    (part(1, 3), part(0, 2), part(0, 3), part(0, 2), part(1, 3))
        .prop_map(|(lp, l, c, r, rp)| EventuallyPeriodicSeq::new(lp, l, c, r, rp).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_round_trips(num in -1_000_000i64..1_000_000, den in 1u64..1_000_000) {
        let w = expand_rational(num, den).unwrap();
        prop_assert!(w.is_canonical());
        prop_assert_eq!(w.eval_finite().unwrap(), rat(num, den as i64));
        let reparsed: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, w);
    }

    #[test]
    fn good_approximations_are_convergents(a in 1i64..1_000_000, b in 2i64..1_000_000, q0 in 1i64..5000) {
        let alpha = rat(a, b);
        let cs = convergents(&expand_rational(a, b as u64).unwrap()).unwrap();
        for q in q0..q0 + 300 {
            let p = i64::try_from(&(&alpha * RBig::from(q)).round()).unwrap();
            let approx = rat(p, q);
            if abs(&alpha - &approx) < rat(1, 2 * q * q) {
                prop_assert!(cs.iter().any(|c| c.value() == approx), "{p}/{q} missing");
            }
        }
    }

    #[test]
    fn convergents_within_one_over_q_squared(digits in word_strategy(20), head in 0i64..5) {
        // the strict bound needs the expansion without a trailing 1
        let w = Word::with_head(head, digits).unwrap().canonical();
        let x = w.eval_finite().unwrap();
        let cs = convergents(&w).unwrap();
        for pair in cs.windows(2) {
            prop_assert!(pair[0].q <= pair[1].q);
        }
        for c in &cs[..cs.len() - 1] {
            let q = RBig::from(c.q.clone());
            prop_assert!(abs(&x - c.value()) < RBig::ONE / (&q * &q));
        }
        prop_assert_eq!(cs.last().unwrap().value(), x);
    }

    #[test]
    fn periodic_value_is_fixed_point(period in word_strategy(6), pre in prop::collection::vec(1u64..=9, 0..4)) {
        let y = purely_periodic_value(&period).unwrap();
        prop_assert!(y > QuadraticSurd::from_int(1));
        let pw = PeriodicWord::new(Word::with_head(0, pre).unwrap(), period).unwrap();
        let x = pw.value().unwrap();
        let t = pw.truncate(60).eval_finite().unwrap();
        prop_assert!(x.enclosure(100).widen(&pow2(-60)).contains(&t));
    }

    #[test]
    fn markov_dominates_samples(s in seq_strategy()) {
        let ctx = PrecisionContext::new(80);
        let m = markov_value(&s, &ctx).unwrap();
        let l = lagrange_value(&s, &ctx).unwrap();
        prop_assert!(l.value.lo <= m.value.hi);
        for k in -12..12 {
            let h = perron_height(&s, k).unwrap().enclosure(80);
            prop_assert!(h.lo <= m.value.hi, "shift {k}: {h} above {}", m.value);
        }
        // The limsup dominates every height along the limiting periodic orbit.
        let orbit = EventuallyPeriodicSeq::periodic(s.right_period().to_vec()).unwrap();
        for k in 0..s.right_period().len() as i64 {
            let h = perron_height(&orbit, k).unwrap().enclosure(80);
            prop_assert!(h.lo <= l.value.hi);
        }
        // and the Markov value is attained near the reported shift
        let at = perron_height(&s, m.shift).unwrap().enclosure(80);
        prop_assert!(at.overlaps(&m.value.widen(&pow2(-70))));
    }

    #[test]
    fn transpose_preserves_markov_value(s in seq_strategy()) {
        let ctx = PrecisionContext::new(80);
        let a = markov_value(&s, &ctx).unwrap().value;
        let b = markov_value(&s.transpose(), &ctx).unwrap().value;
        prop_assert!(a.widen(&pow2(-70)).overlaps(&b));
    }
}
