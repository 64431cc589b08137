//! The arc-weighted bound with custom weights. Any positive weight on arcs
//! gives an upper bound; scaling it changes nothing.

use signless::bounds::{self, BoundContext, DegreeWeight};
use signless::{generate, spectral};

fn main() {
    let g = generate::random_strongly_connected(7, 0.3, 11).unwrap();
    let q = spectral::q_of(&g).unwrap();
    let ctx = BoundContext::new(&g);
    println!("n = 7, m = {}, q = {q:.6}", g.arc_count());

    for w in DegreeWeight::ALL {
        let f = w.on(&g);
        let weighted = bounds::bound_generic_f(&g, &f).unwrap();
        let closed = ctx.evaluate(w.corollary());
        println!(
            "{:<9} weighted {:.6} at {}  closed form {} = {:.6}",
            format!("{w:?}"),
            weighted.value().unwrap(),
            weighted.witness().unwrap(),
            closed.id.label(),
            closed.value().unwrap()
        );
    }

    // weights need not come from degrees
    let by_index = |i: usize, j: usize| 1.0 + (i * j) as f64;
    let v = bounds::bound_generic_f(&g, &by_index).unwrap();
    println!("1 + ij     weighted {:.6} at {}", v.value().unwrap(), v.witness().unwrap());

    // a weight that vanishes on an arc is rejected
    let (i, j) = g.arcs()[0];
    let zero_on_first = move |a: usize, b: usize| if (a, b) == (i, j) { 0.0 } else { 1.0 };
    println!("zero weight on an arc: {}", bounds::bound_generic_f(&g, &zero_on_first).unwrap_err());
}
