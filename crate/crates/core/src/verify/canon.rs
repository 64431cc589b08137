//! Brute-force canonical form for small digraphs.

use crate::digraph::Digraph;

/// Largest vertex count accepted by [`canonical_form`]; `n(n-1)` bits must
/// fit in a `u64` and `n!` relabelings must stay cheap.
pub const MAX_CANON_VERTICES: usize = 8;

/// Minimum adjacency bitstring over all vertex relabelings. Two digraphs on
/// the same vertex count are isomorphic iff their forms are equal.
pub fn canonical_form(g: &Digraph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_CANON_VERTICES, "canonical form limited to {MAX_CANON_VERTICES} vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    for_each_permutation(&mut perm, &mut |perm| {
        best = best.min(bitstring(g, perm));
    });
    best
}

/// Bit `k` is set iff the k-th ordered pair (lexicographic, loops skipped)
/// is an arc after relabeling `v -> perm[v]`. The first pair is the most
/// significant bit.
fn bitstring(g: &Digraph, perm: &[usize]) -> u64 {
    let n = g.vertex_count();
    let total = n * (n - 1);
    let mut bits = 0u64;
    for &(i, j) in g.arcs() {
        let (a, b) = (perm[i], perm[j]);
        let k = a * (n - 1) + if b > a { b - 1 } else { b };
        bits |= 1 << (total - 1 - k);
    }
    bits
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
