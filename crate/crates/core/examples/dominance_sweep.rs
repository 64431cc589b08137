//! Checks every invariant on a seeded corpus of random strongly connected
//! digraphs. Usage: `dominance_sweep [count] [seed]`.

use signless::report::{render_sweep, Format};
use signless::verify::{self, CorpusSpec, Invariant};
use signless::SolverOptions;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().map_or(500, |s| s.parse().expect("count"));
    let seed = args.next().map_or(42, |s| s.parse().expect("seed"));
    let spec = CorpusSpec { count, n_min: 3, n_max: 12, probabilities: vec![0.2, 0.3, 0.5], seed };
    let report = verify::sweep(&spec, &Invariant::ALL, SolverOptions::default()).unwrap();
    print!("{}", render_sweep(&report, Format::Table));
    std::process::exit(if report.passed() { 0 } else { 1 });
}
