//! Randomised invariants over generated digraphs.

mod support;

use proptest::prelude::*;
use signless::bounds::{BoundContext, BoundId};
use signless::spectral::{self, Similarity};
use signless::verify::{self, Invariant};
use signless::{edgelist, generate, Digraph, SolverOptions};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n, 0.05f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| generate::random_digraph(n, p, seed).unwrap())
}

fn strong(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n, 0.0f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| generate::random_strongly_connected(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle(g in digraph(6)) {
        let q = spectral::q_of(&g).unwrap();
        let want = support::oracle_radius(&g);
        prop_assert!((q - want).abs() < 1e-6, "{:?}: {} vs {}", g.arcs(), q, want);
    }

    #[test]
    fn components_come_sinks_first(g in digraph(9)) {
        let scc = g.scc();
        let mut seen = std::collections::HashSet::new();
        for (k, comp) in scc.components.iter().enumerate() {
            for &v in comp {
                prop_assert_eq!(scc.component_of[v], k);
                // arcs leave a component only towards earlier ones
                for &w in g.out_neighbors(v) {
                    prop_assert!(scc.component_of[w] <= k);
                }
                prop_assert!(seen.insert(v));
            }
        }
        prop_assert_eq!(seen.len(), g.vertex_count());
    }

    #[test]
    fn q_is_the_largest_block_radius(g in digraph(8)) {
        let r = spectral::spectral_radius(&g, SolverOptions::default()).unwrap();
        let best = r.per_component.iter().map(|&(_, q)| q).fold(0.0, f64::max);
        prop_assert_eq!(r.q, best);
        prop_assert_eq!(r.per_component.len(), g.scc().components.len());
    }

    #[test]
    fn brackets_and_ovals(g in strong(10)) {
        let q = spectral::q_of(&g).unwrap();
        let (lo, hi) = spectral::row_sum_bracket(spectral::build_q(&g).matrix());
        prop_assert!(lo - 1e-9 <= q && q <= hi + 1e-9);
        let (lo, hi) = spectral::row_sum_bracket(&spectral::similarity_transform(&g, Similarity::DegInverse).unwrap());
        prop_assert!(lo - 1e-9 <= q && q <= hi + 1e-9);
        prop_assert!(spectral::oval_containment(&g, q).unwrap().contained);
    }

    #[test]
    fn witnesses_reproduce_values(g in digraph(9)) {
        let ctx = BoundContext::new(&g);
        for id in BoundId::TABLE_ORDER {
            let b = ctx.evaluate(id);
            if let (Some(v), Some(w)) = (b.value(), b.witness()) {
                prop_assert_eq!(ctx.term_at(id, w), Some(v), "{} at {}", id.label(), w);
            }
        }
    }

    #[test]
    fn bounds_dominate(g in strong(10)) {
        let q = spectral::q_of(&g).unwrap();
        for b in signless::all_bounds(&g) {
            if let Some(v) = b.value() {
                prop_assert!(q <= v + 1e-9, "{} = {} < q = {}", b.id.label(), v, q);
            }
        }
    }

    #[test]
    fn relabelling_changes_nothing(g in strong(7), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(verify::canonical_form(&g), verify::canonical_form(&h));
        prop_assert!((spectral::q_of(&g).unwrap() - spectral::q_of(&h).unwrap()).abs() < 1e-9);
        let (a, b) = (BoundContext::new(&g), BoundContext::new(&h));
        for id in BoundId::TABLE_ORDER {
            match (a.evaluate(id).value(), b.evaluate(id).value()) {
                (Some(x), Some(y)) => prop_assert!((x - y).abs() < 1e-12),
                (x, y) => prop_assert_eq!(x, y),
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in digraph(9)) {
        prop_assert_eq!(edgelist::parse(&edgelist::serialize(&g)).unwrap(), g);
    }
}

#[test]
fn every_invariant_on_small_strong_digraphs() {
    let graphs: Vec<Digraph> = (2..=4).flat_map(support::all_digraphs).filter(|g| g.is_strongly_connected()).collect();
    let report = verify::sweep_graphs("all strong n<=4", &graphs, &Invariant::ALL, SolverOptions::default());
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn char_poly_of_cycle() {
    // det(xI - (I + P)) = (x - 1)^3 - 1 = x^3 - 3x^2 + 3x - 2
    let c = generate::directed_cycle(3).unwrap();
    assert_eq!(support::char_poly(&c), vec![-2, 3, -3, 1]);
}
