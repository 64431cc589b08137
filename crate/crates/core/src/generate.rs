//! Deterministic generators for the digraph families used in tests and
//! sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Directed cycle `0 → 1 → … → n-1 → 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    require(n >= 2, || format!("directed cycle needs n >= 2, got {n}"))?;
    Digraph::from_arc_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete digraph `K↔_n`, every ordered pair is an arc.
pub fn bidirectional_complete(n: usize) -> Result<Digraph> {
    require(n >= 2, || format!("complete digraph needs n >= 2, got {n}"))?;
    Digraph::from_arc_list(n, (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))))
}

/// `K↔_{1,n-1}` with centre 0.
pub fn bidirectional_star(n: usize) -> Result<Digraph> {
    require(n >= 3, || format!("bidirectional star needs n >= 3, got {n}"))?;
    Digraph::from_arc_list(n, (1..n).flat_map(|leaf| [(0, leaf), (leaf, 0)]))
}

/// Connected symmetric bipartite digraph with parts of sizes `p` and `q`,
/// outdegree `r` on the first part (vertices `0..p`) and `s` on the second
/// (vertices `p..p+q`).
///
/// Requires `p·r = q·s`, `1 <= r <= q`, `1 <= s <= p` and enough edges for a
/// connected graph (`p·r >= p + q - 1`).
pub fn bipartite_semiregular(p: usize, q: usize, r: usize, s: usize) -> Result<Digraph> {
    let infeasible = |why: &str| Err(Error::InfeasibleBipartite(format!("(p={p}, q={q}, r={r}, s={s}): {why}")));
    if p == 0 || q == 0 {
        return infeasible("both parts must be non-empty");
    }
    if r == 0 || s == 0 || r > q || s > p {
        return infeasible("need 1 <= r <= q and 1 <= s <= p");
    }
    if p * r != q * s {
        return infeasible("edge counts p·r and q·s differ");
    }
    if p * r + 1 < p + q {
        return infeasible("too few edges for a connected graph");
    }

    // Cyclic layout: X vertex a takes the r consecutive Y slots starting at
    // a·r (mod q). Every Y vertex receives exactly s edges.
    let mut edges: Vec<(usize, usize)> = (0..p).flat_map(|a| (0..r).map(move |t| (a, (a * r + t) % q))).collect();

    // Merge components with degree-preserving swaps. When r, s >= 2 every
    // component has a cycle, so a non-bridge edge always exists; when r or s
    // is 1 the feasibility check above forces a star, which is connected.
    loop {
        let comp = components(p, q, &edges);
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        if count <= 1 {
            break;
        }
        let first = edges
            .iter()
            .position(|&(a, b)| comp[a] == 0 && !is_bridge(p, q, &edges, (a, b)))
            .ok_or_else(|| Error::InfeasibleBipartite(format!("(p={p}, q={q}, r={r}, s={s}): cannot connect")))?;
        let second = edges.iter().position(|&(a, _)| comp[a] != 0).expect("a second component has edges");
        let (x1, y1) = edges[first];
        let (x2, y2) = edges[second];
        edges[first] = (x1, y2);
        edges[second] = (x2, y1);
    }

    Digraph::from_arc_list(p + q, edges.iter().flat_map(|&(a, b)| [(a, p + b), (p + b, a)]))
}

/// Component id per X vertex (Y vertices are not returned).
fn components(p: usize, q: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..p + q).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut root = v;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = v;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, p + b));
        parent[ra] = rb;
    }
    let mut ids = std::collections::HashMap::new();
    (0..p)
        .map(|a| {
            let root = find(&mut parent, a);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        })
        .collect()
}

fn is_bridge(p: usize, q: usize, edges: &[(usize, usize)], e: (usize, usize)) -> bool {
    let rest: Vec<_> = edges.iter().copied().filter(|&f| f != e).collect();
    // The edge's endpoints stay connected iff X vertex e.0 still reaches Y vertex e.1.
    let mut adj = vec![Vec::new(); p + q];
    for &(a, b) in &rest {
        adj[a].push(p + b);
        adj[p + b].push(a);
    }
    let mut seen = vec![false; p + q];
    let mut stack = vec![e.0];
    seen[e.0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    !seen[p + e.1]
}

/// Random strongly connected digraph.
///
/// A Hamiltonian cycle through a seeded Fisher–Yates permutation is laid
/// down first; every remaining ordered pair, visited in lexicographic
/// order, is then added independently with probability `arc_probability`.
pub fn random_strongly_connected(n: usize, arc_probability: f64, seed: u64) -> Result<Digraph> {
    require(n >= 2, || format!("random strongly connected digraph needs n >= 2, got {n}"))?;
    require((0.0..=1.0).contains(&arc_probability), || {
        format!("arc probability must lie in [0, 1], got {arc_probability}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    let mut arcs = Vec::new();
    for k in 0..n {
        let (i, j) = (perm[k], perm[(k + 1) % n]);
        present[i * n + j] = true;
        arcs.push((i, j));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && !present[i * n + j] && rng.gen_bool(arc_probability) {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arc_list(n, arcs)
}

/// Random digraph with independent arcs, not necessarily connected. If no
/// arc survives the draw, the single arc `0 → 1` is used instead.
pub fn random_digraph(n: usize, arc_probability: f64, seed: u64) -> Result<Digraph> {
    require(n >= 2, || format!("random digraph needs n >= 2, got {n}"))?;
    require((0.0..=1.0).contains(&arc_probability), || {
        format!("arc probability must lie in [0, 1], got {arc_probability}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(arc_probability) {
                arcs.push((i, j));
            }
        }
    }
    if arcs.is_empty() {
        arcs.push((0, 1));
    }
    Digraph::from_arc_list(n, arcs)
}
