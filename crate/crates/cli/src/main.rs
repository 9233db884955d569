mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{FileConfig, Overrides, RunConfig, BITS_ENV};

/// Continued fractions, Markov triples, Gauss-Cantor dimensions and certified
/// approximations of the Lagrange and Markov spectra.
///
/// Exit status: 0 on success, 2 on invalid input, 3 when an enumeration
/// budget runs out, 1 on I/O failure. Output is byte-identical for fixed
/// flags, whatever the thread count.
#[derive(Parser, Debug)]
#[command(name = "spectra", version, propagate_version = true)]
struct Cli {
    /// Worker threads for the data-parallel kernels [default: all cores].
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// TOML file of `key = value` overrides: bits, threads, max_words,
    /// max_orbits, out, svg. Command-line flags win over the file.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Working precision in bits [default: $SPECTRA_BITS, else 256].
    #[arg(long, global = true)]
    bits: Option<usize>,
    /// Cap on enumerated words and search nodes.
    #[arg(long, global = true, value_name = "N")]
    max_words: Option<u128>,
    /// Cap on enumerated periodic orbits.
    #[arg(long, global = true, value_name = "N")]
    max_orbits: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified outer cover and exact inner points of M ∩ [a, b].
    ///
    /// Writes CSV with header `kind,lo,hi,word`: `outer` rows are closed
    /// intervals of spectrum values, `inner` rows are exact points given by
    /// a purely periodic word (digits separated by spaces). Without --out the
    /// CSV goes to stdout.
    Approx(ApproxArgs),
    /// Gaps of M ∩ [a, b]: the complement of the certified outer cover.
    ///
    /// CSV with header `lo,hi`, one open gap per row. Gaps are conservative:
    /// a reported gap is certainly free of spectrum values.
    Gaps(RangeArgs),
    /// Markov triples and Markov numbers.
    #[command(subcommand)]
    Markov(MarkovCommand),
    /// Hausdorff dimension of Gauss-Cantor sets.
    #[command(subcommand)]
    Dim(DimCommand),
    /// Writes a target t ≥ 4 + √2 as c0 + x + y with x, y ∈ C(4) and checks the
    /// resulting sequences.
    ///
    /// Prints `key: value` lines; `sequence` uses the `((period))|...|((period))`
    /// syntax and `markov`/`lagrange` are the values it realises.
    Hall {
        /// Target spectrum value.
        #[arg(long)]
        target: f64,
        /// Tolerance on both realised values.
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
    },
    /// Named constants as CSV `name,expression,value`.
    Constants {
        /// Significant decimal digits.
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
}

#[derive(Args, Debug)]
struct RangeArgs {
    /// Value range `a,b` on the real line.
    #[arg(long, value_parser = parse_range)]
    range: (f64, f64),
    /// Resolution: outer pieces are at most 1/Q wide.
    #[arg(long = "Q", value_name = "Q")]
    q: u64,
    /// Largest partial quotient considered; must be at least b - 1 unless
    /// --restricted is set.
    #[arg(long)]
    alphabet: u64,
    /// Cover the spectrum of sequences with digits ≤ alphabet only.
    #[arg(long)]
    restricted: bool,
    /// Longest period tried for inner points [default: from the budget].
    #[arg(long)]
    period_bound: Option<usize>,
}

#[derive(Args, Debug)]
struct ApproxArgs {
    #[command(flatten)]
    range: RangeArgs,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG strip plot output path (960 px wide, value on the x axis).
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum MarkovCommand {
    /// Triples with largest entry ≤ B, one `x,y,z` row each, sorted.
    Tree {
        #[arg(long)]
        bound: String,
    },
    /// Number of Markov numbers ≤ x against c (log 3x)², as CSV
    /// `x,count,reference,ratio`.
    Count {
        #[arg(long)]
        x: String,
    },
    /// Vieta descent of one triple to (1,1,1), one move per line.
    Descend {
        /// Triple `x,y,z`.
        #[arg(long)]
        triple: String,
    },
    /// Components of the mod-p Markov graphs, as CSV
    /// `p,num_vertices,num_components,largest` for primes 3 ≤ p ≤ max.
    Modp {
        #[arg(long)]
        max_p: u64,
    },
}

#[derive(Subcommand, Debug)]
enum DimCommand {
    /// Root of the truncated Fredholm determinant, as a JSON report.
    ///
    /// `s_m` is the order-M root in decimal, `digits` the digits it shares
    /// with the order M-1 root, `deltas` the successive root differences.
    Bowen {
        /// Block set, e.g. "1,2" or "(1,2),3".
        #[arg(long)]
        set: String,
        /// Truncation order M (periods up to M).
        #[arg(long)]
        order: usize,
    },
    /// Covering bounds alpha_m ≤ dim ≤ beta_m at level m, as JSON.
    Cover {
        #[arg(long)]
        set: String,
        #[arg(long)]
        level: usize,
        /// Mixing order n0 used for the lower bound.
        #[arg(long, default_value_t = 1)]
        mixing: usize,
    },
    /// The two-child gap inequality for C(2) at exponent s0, as JSON, then
    /// the upper bound dim C(2) + s0 on one line.
    GapExponent {
        #[arg(long, default_value_t = 0.174813)]
        s0: f64,
        /// Words of length up to this depth are checked.
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    let a: f64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(p) => match FileConfig::load(p) {
            Ok(f) => f,
            Err(e) => return commands::fail(commands::Failure::Invalid(e)),
        },
        None => FileConfig::default(),
    };
    let flags = Overrides {
        bits: cli.bits,
        threads: cli.threads,
        max_words: cli.max_words,
        max_orbits: cli.max_orbits,
    };
    let cfg = match RunConfig::resolve(flags, file, std::env::var(BITS_ENV).ok()) {
        Ok(c) => c,
        Err(e) => return commands::fail(commands::Failure::Invalid(e)),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return commands::fail(commands::Failure::Io(e.to_string())),
    };
    match pool.install(|| commands::run(cli.command, &cfg)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => commands::fail(f),
    }
}
