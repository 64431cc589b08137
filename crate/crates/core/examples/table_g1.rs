//! Rebuilds the 4-vertex comparison row by exhaustive search and ranks the
//! eleven bounds on the digraph found.

use signless::report::{render_reconstruction, Format};
use signless::verify::{self, Preset};
use signless::SolverOptions;

fn main() {
    let out = verify::reconstruct(&Preset::G1.target(), SolverOptions::default()).unwrap();
    print!("{}", render_reconstruction(&out, Format::Table));
    for m in &out.matches {
        let r = verify::remark_check(&m.digraph);
        println!("ranking (smallest first):");
        for (id, v) in &r.ranking {
            println!("  {:<5} {v:.4}", id.label());
        }
    }
}
