//! Families with a known spectral radius, and the bounds that are tight on them.

use signless::bounds::{self, BoundContext, BoundId};
use signless::{generate, spectral, Digraph};

fn show(name: &str, g: &Digraph, expected: f64) {
    let q = spectral::q_of(g).unwrap();
    let ctx = BoundContext::new(g);
    let tight: Vec<&str> = BoundId::TABLE_ORDER
        .iter()
        .filter(|&&id| ctx.evaluate(id).value().is_some_and(|v| (v - q).abs() < 1e-9))
        .map(|id| id.label())
        .collect();
    println!("{name:<10} q = {q:>8.4} (expected {expected:>4})  tight: {}", tight.join(" "));
}

fn main() {
    for n in [3, 5, 8] {
        show(&format!("C{n}"), &generate::directed_cycle(n).unwrap(), 2.0);
    }
    for n in [3, 5, 8] {
        show(&format!("star{n}"), &generate::bidirectional_star(n).unwrap(), n as f64);
    }
    for k in 3..=6 {
        show(&format!("K{k}"), &generate::bidirectional_complete(k).unwrap(), 2.0 * (k as f64 - 1.0));
    }
    // K(2,4) with both sides regular: q = r + s
    let g = generate::bipartite_semiregular(2, 4, 4, 2).unwrap();
    show("K(2,4)", &g, 6.0);
    println!("(27) on K(2,4): {:?}", bounds::bound_thm31(&g).value());
}
