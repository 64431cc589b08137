//! Digraphs without loops or multiple arcs, their degree statistics and
//! structural predicates.
//!
//! Vertices are the integers `0..n`. Arc lists are kept sorted in
//! lexicographic order, which is also the order in which the bound
//! evaluators break ties.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple digraph with at least one arc.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices from arbitrary ordered pairs.
    /// Duplicate pairs collapse into a single arc.
    pub fn from_arc_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (i, j) in pairs {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::LoopArc(i));
            }
            set.insert((i, j));
        }
        if set.is_empty() {
            return Err(Error::NoArcs);
        }
        let arcs: Vec<_> = set.into_iter().collect();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(i, j) in &arcs {
            out[i].push(j);
            inn[j].push(i);
        }
        for list in &mut inn {
            list.sort_unstable();
        }
        Ok(Digraph { n, arcs, out, inn })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i < self.n && self.out[i].binary_search(&j).is_ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    pub fn scc(&self) -> SccDecomposition {
        SccDecomposition::of(self)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.scc().len() == 1
    }

    pub fn classify(&self) -> Classification {
        Classification::of(self)
    }

    /// Returns the digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        Digraph::from_arc_list(self.n, self.arcs.iter().map(|&(i, j)| (perm[i], perm[j])))
            .expect("relabeling preserves validity")
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

/// Outdegree-based statistics of a digraph.
///
/// `avg_two_outdeg[i]` is `None` exactly when vertex `i` is a sink, because
/// the average of an empty out-neighbourhood is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub outdeg: Vec<usize>,
    pub indeg: Vec<usize>,
    pub two_outdeg: Vec<usize>,
    pub avg_two_outdeg: Vec<Option<f64>>,
    pub max_outdeg: usize,
    pub min_outdeg: usize,
    pub arc_count: usize,
}

impl DegreeProfile {
    pub fn of(g: &Digraph) -> Self {
        let n = g.vertex_count();
        let outdeg: Vec<usize> = (0..n).map(|v| g.outdegree(v)).collect();
        let indeg: Vec<usize> = (0..n).map(|v| g.indegree(v)).collect();
        let two_outdeg: Vec<usize> = (0..n).map(|v| g.out_neighbors(v).iter().map(|&w| outdeg[w]).sum()).collect();
        let avg_two_outdeg = (0..n).map(|v| (outdeg[v] > 0).then(|| two_outdeg[v] as f64 / outdeg[v] as f64)).collect();
        DegreeProfile {
            max_outdeg: outdeg.iter().copied().max().unwrap_or(0),
            min_outdeg: outdeg.iter().copied().min().unwrap_or(0),
            arc_count: g.arc_count(),
            outdeg,
            indeg,
            two_outdeg,
            avg_two_outdeg,
        }
    }

    /// `d_v + m_v`, the row sum of `D^{-1} Q D`; `None` at sinks.
    pub fn deg_plus_avg(&self, v: usize) -> Option<f64> {
        self.avg_two_outdeg[v].map(|m| self.outdeg[v] as f64 + m)
    }
}

/// Strongly connected components listed in reverse topological order of
/// the condensation: every arc stays inside a component or points from a
/// later-listed component to an earlier one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl SccDecomposition {
    /// Iterative Tarjan. Components come out sinks first.
    pub fn of(g: &Digraph) -> Self {
        const UNVISITED: usize = usize::MAX;
        let n = g.vertex_count();
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut component_of = vec![UNVISITED; n];
        let mut components = Vec::new();
        let mut next_index = 0;
        // (vertex, position in its out-neighbour list)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNVISITED {
                continue;
            }
            call.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = g.out_neighbors(v).get(*pos) {
                    *pos += 1;
                    if index[w] == UNVISITED {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = components.len();
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component_of[w] = id;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    components.push(members);
                }
            }
        }
        SccDecomposition { component_of, components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Structural flags used by the equality cases of the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub is_strongly_connected: bool,
    /// All outdegrees equal.
    pub is_regular: bool,
    pub is_directed_cycle: bool,
    pub is_bidirectional_star: bool,
    pub is_bipartite_semiregular: bool,
    pub is_in_g_star_class: bool,
}

impl Classification {
    pub fn of(g: &Digraph) -> Self {
        let p = g.degree_profile();
        let strong = g.is_strongly_connected();
        Classification {
            is_strongly_connected: strong,
            is_regular: p.min_outdeg == p.max_outdeg,
            is_directed_cycle: strong && p.max_outdeg == 1 && g.arc_count() == g.vertex_count(),
            is_bidirectional_star: is_bidirectional_star(g),
            is_bipartite_semiregular: strong && is_bipartite_semiregular(g),
            is_in_g_star_class: strong && is_in_g_star_class(g, &p),
        }
    }
}

fn is_symmetric(g: &Digraph) -> bool {
    g.arcs().iter().all(|&(i, j)| g.has_arc(j, i))
}

/// `K↔_{1,n-1}` for `n >= 3`: one centre joined to every other vertex by a
/// pair of opposite arcs and nothing else.
fn is_bidirectional_star(g: &Digraph) -> bool {
    let n = g.vertex_count();
    if n < 3 || g.arc_count() != 2 * (n - 1) || !is_symmetric(g) {
        return false;
    }
    (0..n).any(|c| g.outdegree(c) == n - 1)
}

/// Interpretation used here: a strongly connected symmetric digraph whose
/// underlying graph has a bipartition (X, Y) with all outdegrees equal to
/// r on X and s on Y. For such digraphs `d_i + m_i = r + s` at every vertex.
fn is_bipartite_semiregular(g: &Digraph) -> bool {
    if !is_symmetric(g) {
        return false;
    }
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    side[0] = Some(false);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let s = side[v].expect("queued vertices are coloured");
        for &w in g.out_neighbors(v) {
            match side[w] {
                None => {
                    side[w] = Some(!s);
                    queue.push_back(w);
                }
                Some(t) if t == s => return false,
                Some(_) => {}
            }
        }
    }
    let mut degree_on = [None, None];
    for (v, &colour) in side.iter().enumerate() {
        let Some(s) = colour else { return false };
        let slot = &mut degree_on[s as usize];
        match *slot {
            None => *slot = Some(g.outdegree(v)),
            Some(d) if d != g.outdegree(v) => return false,
            Some(_) => {}
        }
    }
    degree_on[0].is_some() && degree_on[1].is_some()
}

/// Membership in `G*(m, n, (m-(n-1))/2, 1)`, the caller has already checked
/// strong connectivity.
fn is_in_g_star_class(g: &Digraph, p: &DegreeProfile) -> bool {
    let n = g.vertex_count();
    // Δ⁺ >= (m - (n-1)) / 2, in integers
    if 2 * p.max_outdeg + n - 1 < p.arc_count || p.min_outdeg != 1 {
        return false;
    }
    (0..n).filter(|&v| p.outdeg[v] == p.max_outdeg).any(|v| g.out_neighbors(v).iter().any(|&w| p.outdeg[w] >= 2))
}
