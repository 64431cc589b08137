//! Row-sum brackets of Q and its degree similarity, and the ovals that
//! contain q.

use signless::spectral::{self, Similarity};
use signless::{generate, Digraph};

fn main() {
    let g = Digraph::from_arc_list(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (0, 2)]).unwrap();
    let q = spectral::spectral_radius(&g, Default::default()).unwrap();
    println!("q = {:.6} after {} iterations, residual {:.1e}", q.q, q.iterations, q.residual);

    let (lo, hi) = spectral::row_sum_bracket(spectral::build_q(&g).matrix());
    println!("Q row sums:        [{lo}, {hi}]");
    let m = spectral::similarity_transform(&g, Similarity::DegInverse).unwrap();
    let (lo, hi) = spectral::row_sum_bracket(&m);
    println!("D^-1 Q D row sums: [{lo:.4}, {hi:.4}]");

    for oval in spectral::ovals(&g).unwrap() {
        println!(
            "arc {:?}: |z - {}||z - {}| <= {:.4} * {:.4}  contains q: {}",
            oval.arc,
            oval.center_i,
            oval.center_j,
            oval.radius_i,
            oval.radius_j,
            oval.contains_real(q.q, spectral::OVAL_TOL)
        );
    }

    // reducible digraphs: q is the largest block radius
    let g = generate::random_digraph(6, 0.25, 3).unwrap();
    let r = spectral::spectral_radius(&g, Default::default()).unwrap();
    println!("components {:?}", g.scc().components);
    println!("per component {:?}, q = {:.6}", r.per_component, r.q);
}
