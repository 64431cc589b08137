//! Full report for an edge-list file in every output format.
//! Usage: `compute_edge_list [path]`.

use signless::report::{Format, Report};
use signless::{edgelist, SolverOptions};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/g2_near.edges").to_string());
    let g = match edgelist::read_file(path.as_ref()) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = Report::compute(&g, SolverOptions::default()).unwrap();
    for format in [Format::Table, Format::Csv, Format::Json] {
        println!("--- {format:?}");
        print!("{}", report.render(format));
        println!();
    }
}
