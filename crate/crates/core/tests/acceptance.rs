//! End-to-end checks of the headline numbers, one line per criterion.
//!
//! Run with `cargo test -p spectra-core --release --test acceptance -- --nocapture`.

use std::time::Instant;

use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectra_core::bowen::{solve_dimension, solve_system};
use spectra_core::cantor::{
    euler_denominator_check, gap_exponent_check, palis_takens_bounds, sum_cover, CantorSystem, GaussCantorSpec,
    WordSet, DEFAULT_BUDGET,
};
use spectra_core::cf::{convergents, markov_value, EventuallyPeriodicSeq, PrecisionContext, QuadraticSurd, Word};
use spectra_core::markov::{
    descend, enumerate_triples, is_prime, mod_p_graph, spectrum_points, zagier_count, MarkovTriple,
};
use spectra_core::spectra::{approximate_spectra, constants, detect_gaps, hall_realize, ApproxParams};

const C2_DIM: &str = "0.531280506277205141624468647368";

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c2() -> CantorSystem {
    CantorSystem::Gauss(GaussCantorSpec::new(WordSet::alphabet(2)))
}

fn leading_digits(a: &str, b: &str) -> usize {
    a.chars().zip(b.chars()).skip(2).take_while(|(x, y)| x == y).count()
}

fn c2_dimension() -> Check {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let r = pool
        .install(|| solve_dimension(&WordSet::alphabet(2), 12, 256))
        .map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let digits = leading_digits(&r.s_m, C2_DIM);
    ensure(
        digits >= 10 && secs < 60.0,
        format!(
            "s_12 = {}, {digits} digits agree, {secs:.1} s on one thread",
            &r.s_m[..34]
        ),
    )
}

fn affine_middle_third() -> Check {
    let exact = 2f64.ln() / 3f64.ln();
    let sys = CantorSystem::Affine {
        branches: 2,
        slope: 3.0,
    };
    let s = solve_system(&sys, 10, 256, DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?
        .to_f64();
    let b = palis_takens_bounds(&sys, 6, 1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let ok = (s - exact).abs() < 1e-12
        && (b.alpha - exact).abs() < 1e-12
        && (b.beta - exact).abs() < 1e-12
        && (b.alpha - b.beta).abs() < 1e-12;
    ensure(ok, format!("bowen {s:.15}, alpha {:.15}, beta {:.15}", b.alpha, b.beta))
}

fn covering_bracket() -> Check {
    let dim = C2_DIM.parse::<f64>().unwrap();
    let mut widths = Vec::new();
    for m in 2..=10 {
        widths.push(palis_takens_bounds(&c2(), m, 1, DEFAULT_BUDGET).map_err(|e| e.to_string())?);
    }
    let last = widths.last().unwrap();
    let decreasing = widths.windows(2).all(|w| w[1].width() < w[0].width());
    ensure(
        last.contains(dim) && decreasing,
        format!(
            "[{:.6}, {:.6}] at m = 10, widths decreasing: {decreasing}",
            last.alpha, last.beta
        ),
    )
}

fn first_triples() -> Check {
    let triples: Vec<String> = enumerate_triples(&UBig::from(30u8))
        .iter()
        .map(|t| t.to_string())
        .collect();
    let surd =
        |b: i64, d: u64, r: i64| QuadraticSurd::new(IBig::ZERO, IBig::from(b), UBig::from(d), IBig::from(r)).unwrap();
    let expected = [
        surd(1, 5, 1),
        surd(1, 8, 1),
        surd(1, 221, 5),
        surd(1, 1517, 13),
        surd(1, 7565, 29),
    ];
    let points = spectrum_points(5);
    ensure(
        triples == ["1,1,1", "1,1,2", "1,2,5", "1,5,13", "2,5,29"] && points[..] == expected[..],
        format!(
            "{}; {}",
            triples.join(" "),
            points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        ),
    )
}

fn descent_to_root() -> Check {
    let start = Instant::now();
    let triples = enumerate_triples(&UBig::from(100_000_000u32));
    for t in &triples {
        let path = descend(t);
        let end = path.replay().map_err(|e| format!("{t}: {e}"))?;
        if end != MarkovTriple::root().to_array() {
            return Err(format!("{t} ends at {end:?}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(
        secs < 30.0,
        format!("{} triples descend strictly to (1,1,1) in {secs:.2} s", triples.len()),
    )
}

fn zagier_ratio() -> Check {
    let z = zagier_count(&UBig::from(10u8).pow(12));
    let r = z.ratio();
    ensure(
        (0.8..=1.2).contains(&r),
        format!("M(1e12) = {}, reference {:.3}, ratio {r:.4}", z.count, z.reference),
    )
}

fn modp_connected() -> Check {
    let primes: Vec<u64> = (3..=200).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        let g = mod_p_graph(p).map_err(|e| e.to_string())?;
        if !g.is_connected() {
            return Err(format!("p = {p}: components {:?}", g.component_sizes));
        }
    }
    Ok(format!("{} primes from 3 to 199, one component each", primes.len()))
}

fn hall_interval() -> Check {
    let c4 = GaussCantorSpec::new(WordSet::alphabet(4));
    let cover = sum_cover(&c4, &c4, 8, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let (lo, hi) = cover.hull();
    let r = 2f64.sqrt() - 1.0;
    let (lo, hi) = (lo.to_f64().value(), hi.to_f64().value());
    if (lo - r).abs() > 1e-6 || (hi - 4.0 * r).abs() > 1e-6 {
        return Err(format!("hull [{lo}, {hi}]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0f64;
    for _ in 0..50 {
        let t = rng.random_range(6.0..=6.5);
        let h = hall_realize(t, 1e-8).map_err(|e| format!("{t}: {e}"))?;
        worst = worst.max((h.markov - t).abs()).max((h.lagrange - t).abs());
    }
    ensure(
        worst <= 1e-8,
        format!("hull [{lo:.9}, {hi:.9}]; 50 targets in [6, 6.5], worst error {worst:.1e}"),
    )
}

fn gap_exponent() -> Check {
    let rep = gap_exponent_check(0.174813, 12).map_err(|e| e.to_string())?;
    let dim = solve_dimension(&WordSet::alphabet(2), 10, 128)
        .map_err(|e| e.to_string())?
        .to_f64();
    let (d6, s6) = ((dim * 1e6).round() / 1e6, 0.174813);
    let sum = format!("{d6:.6} + {s6:.6} = {:.6}", d6 + s6);
    ensure(
        rep.pass && sum == "0.531281 + 0.174813 = 0.706094",
        format!(
            "worst ratio {:.6} over {} words; upper bound {sum}",
            rep.worst_ratio, rep.words_checked
        ),
    )
}

fn euler_symmetry() -> Check {
    let mut words: Vec<Vec<u64>> = vec![Vec::new()];
    let mut checked = 0;
    for _ in 0..8 {
        words = words
            .iter()
            .flat_map(|w| (1..=3).map(move |d| [w.as_slice(), &[d]].concat()))
            .collect();
        for w in &words {
            let c = euler_denominator_check(w).map_err(|e| e.to_string())?;
            if !c.equal() {
                return Err(format!("{w:?}: {} vs {}", c.q, c.q_transpose));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} words over {{1,2,3}} of length up to 8"))
}

fn perron_facts() -> Check {
    let ctx = PrecisionContext::new(256);
    let value = |s: &str| {
        markov_value(&s.parse::<EventuallyPeriodicSeq>().unwrap(), &ctx)
            .unwrap()
            .exact
    };
    let sqrt = |n: u8| Some(QuadraticSurd::sqrt(UBig::from(n)));
    if value("((1))||((1))") != sqrt(5) || value("((2))||((2))") != sqrt(8) {
        return Err("constant sequences do not give sqrt 5 and sqrt 8".into());
    }
    let start = Instant::now();
    let approx = approximate_spectra(&ApproxParams::new(3.46, 3.61, 1000, 3)).map_err(|e| e.to_string())?;
    let gaps = detect_gaps(&approx, 3.46, 3.61);
    let gap = gaps.gaps.iter().find(|&&(a, b)| a <= 3.4642 && 3.6055 <= b);
    ensure(
        gap.is_some(),
        format!(
            "sqrt 5, sqrt 8 exact; Q = 1000 leaves {:?} uncovered ({:.1} s)",
            gap.copied().unwrap_or_default(),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn hurwitz() -> Check {
    let w = Word::with_head(1, vec![1; 20]).unwrap();
    let c = convergents(&w).unwrap().pop().unwrap();
    let phi = QuadraticSurd::new(IBig::ONE, IBig::ONE, UBig::from(5u8), IBig::from(2)).unwrap();
    let phi = phi.enclosure(256).midpoint();
    let q = RBig::from(c.q.clone());
    let err = (&q * (&q * &phi - RBig::from(c.p.clone()))).to_f64().value().abs();
    let target = 1.0 / 5f64.sqrt();
    ensure(
        (err - target).abs() < 1e-6,
        format!("q20 = {}, q|q phi - p| = {err:.12}, 1/sqrt 5 = {target:.12}", c.q),
    )
}

fn freiman() -> Check {
    let rows = constants().rows(20);
    ensure(rows[0].2.starts_with("4.527829566"), format!("c_F = {}", rows[0].2))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 13] = [
        ("dim C(2) from the Fredholm determinant", c2_dimension),
        ("middle-third set gives log 2 / log 3", affine_middle_third),
        ("covering bounds bracket dim C(2)", covering_bracket),
        ("first Markov triples and spectrum points", first_triples),
        ("descent from every triple up to 1e8", descent_to_root),
        ("Markov number count against c (log 3x)^2", zagier_ratio),
        ("mod-p Markov graphs are connected", modp_connected),
        ("C(4) + C(4) and Hall realisations", hall_interval),
        ("gap exponent 0.174813", gap_exponent),
        ("denominators of a word and its reversal", euler_symmetry),
        ("sqrt 5, sqrt 8 and the gap above sqrt 12", perron_facts),
        ("Hurwitz constant from the golden ratio", hurwitz),
        ("Freiman constant", freiman),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                println!("criterion {n:>2} FAIL  {name}: {detail}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
