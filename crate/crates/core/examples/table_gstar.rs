//! Finds every 4-vertex, 9-arc digraph of the G* class with q ~ 4.7321 and
//! shows that (cm) beats (1) on it.

use signless::report::{render_reconstruction, Format};
use signless::verify::{self, Preset};
use signless::SolverOptions;

fn main() {
    let out = verify::reconstruct(&Preset::GStar.target(), SolverOptions::default()).unwrap();
    print!("{}", render_reconstruction(&out, Format::Table));
    for m in &out.matches {
        let r = verify::remark_check(&m.digraph);
        println!("arcs {:?}: (cm) <= (1) is {:?}", m.digraph.arcs(), r.cm_beats_arc_deg_sum);
    }
}
