//! Markov triples: Vieta involutions, descent, the Markov tree, counting and
//! the mod-p Markov graphs.

mod modp;
mod tree;
mod triple;

pub use modp::{is_prime, mod_p_graph, ModPGraph, ModPReport, Point};
pub use tree::{
    enumerate_triples, frobenius_report, markov_numbers, spectrum_points, zagier_count, FrobeniusReport, ZagierCount,
    ZAGIER_C,
};
pub use triple::{descend, is_markov_triple, vieta, DescentPath, MarkovTriple, Move};
