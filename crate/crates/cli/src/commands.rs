use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use dashu::integer::UBig;
use spectra_core::bowen::solve_system;
use spectra_core::cantor::{gap_exponent_check, palis_takens_bounds, CantorSystem, GaussCantorSpec, WordSet};
use spectra_core::markov::{descend, enumerate_triples, is_prime, mod_p_graph, zagier_count, MarkovTriple, Move};
use spectra_core::spectra::{approximate_spectra, constants, detect_gaps, hall_realize, strip_svg, ApproxParams};
use spectra_core::Error;

use crate::config::RunConfig;
use crate::{ApproxArgs, Command, DimCommand, MarkovCommand, RangeArgs};

#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Budget(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub fn fail(f: Failure) -> ExitCode {
    let (code, msg) = match f {
        Failure::Invalid(m) => (2, m),
        Failure::Budget(m) => (3, m),
        Failure::Io(m) => (1, m),
    };
    eprintln!("spectra: {msg}");
    ExitCode::from(code)
}

type Outcome = Result<(), Failure>;

pub fn run(cmd: Command, cfg: &RunConfig) -> Outcome {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Approx(a) => approx(a, cfg, &mut out),
        Command::Gaps(r) => gaps(&r, cfg, &mut out),
        Command::Markov(m) => markov(m, &mut out),
        Command::Dim(d) => dim(d, cfg, &mut out),
        Command::Hall { target, eps } => hall(target, eps, &mut out),
        Command::Constants { digits } => {
            writeln!(out, "name,expression,value")?;
            for (name, expr, value) in constants().rows(digits) {
                writeln!(out, "{name},{expr},{value}")?;
            }
            Ok(())
        }
    }
}

fn params(r: &RangeArgs, cfg: &RunConfig) -> ApproxParams {
    let mut p = ApproxParams::new(r.range.0, r.range.1, r.q, r.alphabet);
    p.restricted = r.restricted;
    p.period_bound = r.period_bound;
    p.budget = cfg.max_words;
    p
}

fn approx(a: ApproxArgs, cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    let approx = approximate_spectra(&params(&a.range, cfg))?;
    let csv = approx.to_csv();
    match a.out.as_deref().or(cfg.out.as_deref()) {
        Some(path) => write_file(path, &csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    if let Some(path) = a.svg.as_deref().or(cfg.svg.as_deref()) {
        write_file(path, &strip_svg(&approx))?;
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn gaps(r: &RangeArgs, cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    let approx = approximate_spectra(&params(r, cfg))?;
    let report = detect_gaps(&approx, r.range.0, r.range.1);
    writeln!(out, "lo,hi")?;
    for (lo, hi) in report.gaps {
        writeln!(out, "{lo:e},{hi:e}")?;
    }
    Ok(())
}

fn ubig(s: &str) -> Result<UBig, Failure> {
    let t = s.trim();
    // accept 1e12 style bounds as well as plain integers
    if let Some((m, e)) = t.split_once(['e', 'E']) {
        let m: UBig = m
            .parse()
            .map_err(|_| Failure::Invalid(format!("{s:?} is not an integer")))?;
        let e: usize = e
            .parse()
            .map_err(|_| Failure::Invalid(format!("{s:?} is not an integer")))?;
        return Ok(m * UBig::from(10u8).pow(e));
    }
    t.parse()
        .map_err(|_| Failure::Invalid(format!("{s:?} is not a non-negative integer")))
}

fn markov(cmd: MarkovCommand, out: &mut impl Write) -> Outcome {
    match cmd {
        MarkovCommand::Tree { bound } => {
            let b = ubig(&bound)?;
            if b == UBig::ZERO {
                return Err(Failure::Invalid("bound must be at least 1".into()));
            }
            for t in enumerate_triples(&b) {
                writeln!(out, "{t}")?;
            }
        }
        MarkovCommand::Count { x } => {
            let x = ubig(&x)?;
            if x == UBig::ZERO {
                return Err(Failure::Invalid("x must be at least 1".into()));
            }
            let z = zagier_count(&x);
            writeln!(out, "x,count,reference,ratio")?;
            writeln!(out, "{x},{},{:.6},{:.6}", z.count, z.reference, z.ratio())?;
        }
        MarkovCommand::Descend { triple } => {
            let parts: Vec<&str> = triple.split(',').collect();
            let [x, y, z] = parts[..] else {
                return Err(Failure::Invalid(format!("{triple:?} is not x,y,z")));
            };
            let t = MarkovTriple::from_array([ubig(x)?, ubig(y)?, ubig(z)?])?;
            let path = descend(&t);
            writeln!(out, "move,x,y,z")?;
            writeln!(out, "start,{t}")?;
            let mut cur = t.to_array();
            for m in &path.moves {
                cur = m.apply(&cur)?;
                let name = match m {
                    Move::Vieta(c) => format!("vieta{c}"),
                    Move::Permute(p) => format!("permute{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1),
                };
                writeln!(out, "{name},{},{},{}", cur[0], cur[1], cur[2])?;
            }
        }
        MarkovCommand::Modp { max_p } => {
            if max_p < 3 {
                return Err(Failure::Invalid("max_p must be at least 3".into()));
            }
            writeln!(out, "p,num_vertices,num_components,largest")?;
            for p in (3..=max_p).filter(|&p| is_prime(p)) {
                writeln!(out, "{}", mod_p_graph(p)?.report())?;
            }
        }
    }
    Ok(())
}

fn word_set(s: &str) -> Result<WordSet, Failure> {
    Ok(s.parse::<WordSet>()?)
}

fn json(out: &mut impl Write, v: &impl serde::Serialize) -> Outcome {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn dim(cmd: DimCommand, cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    match cmd {
        DimCommand::Bowen { set, order } => {
            let sys = CantorSystem::Gauss(GaussCantorSpec::new(word_set(&set)?));
            json(out, &solve_system(&sys, order, cfg.bits, cfg.max_orbits)?)
        }
        DimCommand::Cover { set, level, mixing } => {
            let sys = CantorSystem::Gauss(GaussCantorSpec::new(word_set(&set)?));
            json(out, &palis_takens_bounds(&sys, level, mixing, cfg.max_words)?)
        }
        DimCommand::GapExponent { s0, depth } => {
            let report = gap_exponent_check(s0, depth)?;
            json(out, &report)?;
            if !report.pass {
                return Err(Failure::Invalid(format!("gap inequality fails at exponent {s0}")));
            }
            let c2 = CantorSystem::Gauss(GaussCantorSpec::new(WordSet::alphabet(2)));
            let d = solve_system(&c2, 10, cfg.bits, cfg.max_orbits)?.to_f64();
            // add the rounded figures so the printed sum is exact
            let (d6, s6) = ((d * 1e6).round() / 1e6, (s0 * 1e6).round() / 1e6);
            writeln!(out, "upper bound: {d6:.6} + {s6:.6} = {:.6}", d6 + s6)?;
            Ok(())
        }
    }
}

fn hall(target: f64, eps: f64, out: &mut impl Write) -> Outcome {
    let h = hall_realize(target, eps)?;
    let digits = |w: &[u64]| w.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    writeln!(out, "target: {}", h.target)?;
    writeln!(out, "c0: {}", h.c0)?;
    writeln!(out, "x: [0;{}, 2, 2, ...]", digits(&h.x_digits))?;
    writeln!(out, "y: [0;{}, 2, 2, ...]", digits(&h.y_digits))?;
    writeln!(out, "sequence: {}", h.sequence)?;
    writeln!(out, "period: {}", digits(&h.periodic))?;
    writeln!(out, "markov: {:.12}", h.markov)?;
    writeln!(out, "lagrange: {:.12}", h.lagrange)?;
    Ok(())
}
