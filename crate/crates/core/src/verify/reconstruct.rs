//! Exhaustive search for small digraphs whose spectral radius and bound row
//! match a reference table row.

use rayon::prelude::*;

use crate::bounds::{BoundContext, BoundId, BoundValue};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectral::{self, SolverOptions};
use crate::verify::canon::canonical_form;

/// Tables print four decimals; half a unit in the last place.
pub const TABLE_TOL: f64 = 5e-4;

/// Largest vertex count searched without a fixed arc count.
pub const MAX_FREE_VERTICES: usize = 5;
/// Largest vertex count searched at all (arc sets must fit in 30 bits).
pub const MAX_FIXED_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionTarget {
    pub name: String,
    pub n: usize,
    pub m: Option<usize>,
    pub max_outdeg: Option<usize>,
    pub min_outdeg: Option<usize>,
    pub require_strong: bool,
    pub require_g_star: bool,
    pub expected_q: Option<f64>,
    pub expected: Vec<(BoundId, f64)>,
    pub tolerance: f64,
}

impl ReconstructionTarget {
    pub fn new(name: impl Into<String>, n: usize) -> Self {
        ReconstructionTarget {
            name: name.into(),
            n,
            m: None,
            max_outdeg: None,
            min_outdeg: None,
            require_strong: false,
            require_g_star: false,
            expected_q: None,
            expected: Vec::new(),
            tolerance: TABLE_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTarget(format!("{}: {msg}", self.name)));
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return bad(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.n < 2 {
            return bad(format!("need at least 2 vertices, got {}", self.n));
        }
        if self.n > MAX_FIXED_VERTICES {
            return bad(format!("exhaustive search is limited to n <= {MAX_FIXED_VERTICES}, got {}", self.n));
        }
        if self.n > MAX_FREE_VERTICES && self.m.is_none() {
            return bad(format!(
                "n = {} has 2^{} arc sets; fix the arc count (for example --m 11) to search C({}, m) sets instead",
                self.n,
                self.n * (self.n - 1),
                self.n * (self.n - 1)
            ));
        }
        if let Some(m) = self.m {
            if m == 0 || m > self.n * (self.n - 1) {
                return bad(format!("arc count {m} impossible on {} vertices", self.n));
            }
        }
        if self.expected.iter().any(|(id, _)| *id == BoundId::GenericF) {
            return bad("the weighted bound (29) has no fixed value".into());
        }
        Ok(())
    }

    /// Largest absolute difference between the target and a computed row.
    /// Inapplicable bounds count as infinitely far.
    pub fn bound_deviation(&self, row: &[BoundValue]) -> f64 {
        self.expected
            .iter()
            .map(|&(id, want)| match row.iter().find(|b| b.id == id).and_then(|b| b.value()) {
                Some(v) => (v - want).abs(),
                None => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }

    pub fn deviation(&self, q: f64, row: &[BoundValue]) -> f64 {
        let dq = self.expected_q.map_or(0.0, |want| (q - want).abs());
        dq.max(self.bound_deviation(row))
    }

    /// Bound columns off by more than the tolerance.
    fn bound_mismatches(&self, row: &[BoundValue]) -> usize {
        self.expected
            .iter()
            .filter(|&&(id, want)| {
                row.iter()
                    .find(|b| b.id == id)
                    .and_then(|b| b.value())
                    .is_none_or(|v| (v - want).abs() > self.tolerance)
            })
            .count()
    }

    /// Closeness used to pick the nearest candidate: mismatched columns
    /// first, then the largest deviation.
    fn score(&self, q: f64, row: &[BoundValue]) -> (usize, f64) {
        let q_off = self.expected_q.is_some_and(|want| (q - want).abs() > self.tolerance);
        (self.bound_mismatches(row) + q_off as usize, self.deviation(q, row))
    }

    /// Per-entry comparison of a digraph against the target row.
    pub fn compare(&self, g: &Digraph, opts: SolverOptions) -> Result<RowComparison> {
        let q = spectral::spectral_radius(g, opts)?.q;
        let row = BoundContext::new(g).all();
        let mut entries = Vec::new();
        if let Some(want) = self.expected_q {
            entries.push(RowEntry { column: "q".into(), expected: want, computed: Some(q) });
        }
        for &(id, want) in &self.expected {
            let computed = row.iter().find(|b| b.id == id).and_then(|b| b.value());
            entries.push(RowEntry { column: id.label().into(), expected: want, computed });
        }
        Ok(RowComparison { tolerance: self.tolerance, entries })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowEntry {
    pub column: String,
    pub expected: f64,
    pub computed: Option<f64>,
}

impl RowEntry {
    pub fn deviation(&self) -> f64 {
        self.computed.map_or(f64::INFINITY, |c| (c - self.expected).abs())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowComparison {
    pub tolerance: f64,
    pub entries: Vec<RowEntry>,
}

impl RowComparison {
    pub fn max_deviation(&self) -> f64 {
        self.entries.iter().map(RowEntry::deviation).fold(0.0, f64::max)
    }

    pub fn matches(&self) -> bool {
        self.max_deviation() <= self.tolerance
    }

    pub fn mismatched(&self) -> impl Iterator<Item = &RowEntry> {
        self.entries.iter().filter(|e| e.deviation() > self.tolerance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionMatch {
    pub digraph: Digraph,
    pub q: f64,
    pub row: Vec<BoundValue>,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionOutcome {
    pub target: ReconstructionTarget,
    /// Arc sets enumerated.
    pub visited: u64,
    /// Arc sets that passed the structural constraints.
    pub candidates: u64,
    /// Matches within tolerance, one per isomorphism class, in enumeration
    /// order.
    pub matches: Vec<ReconstructionMatch>,
    /// Constrained candidate with the fewest mismatched columns, ties broken
    /// by the smallest deviation.
    pub nearest: Option<ReconstructionMatch>,
}

/// Ordered pairs `(i, j)`, `i != j`, in lexicographic order. Bit `k` of an
/// arc-set mask selects `pairs[k]`.
fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

struct ChunkResult {
    visited: u64,
    candidates: u64,
    matches: Vec<ReconstructionMatch>,
    nearest: Option<((usize, f64), ReconstructionMatch)>,
}

fn better(a: (usize, f64), b: (usize, f64)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Enumerates every arc set on `target.n` vertices (or every set of exactly
/// `target.m` arcs), keeps those meeting the structural constraints, and
/// returns the ones whose `q` and bound row match within tolerance.
pub fn reconstruct(target: &ReconstructionTarget, opts: SolverOptions) -> Result<ReconstructionOutcome> {
    target.validate()?;
    let n = target.n;
    let pairs = ordered_pairs(n);
    let total: u64 = 1 << pairs.len();
    let chunk_count: u64 = 1024.min(total);
    let chunk_len = total.div_ceil(chunk_count);

    let chunks: Vec<ChunkResult> = (0..chunk_count)
        .into_par_iter()
        .map(|c| {
            let lo = (c * chunk_len).max(1);
            let hi = ((c + 1) * chunk_len).min(total);
            search_range(target, &pairs, lo..hi, opts)
        })
        .collect();

    let mut outcome =
        ReconstructionOutcome { target: target.clone(), visited: 0, candidates: 0, matches: Vec::new(), nearest: None };
    let mut forms = std::collections::HashSet::new();
    let mut nearest: Option<((usize, f64), ReconstructionMatch)> = None;
    for chunk in chunks {
        outcome.visited += chunk.visited;
        outcome.candidates += chunk.candidates;
        for m in chunk.matches {
            if forms.insert(canonical_form(&m.digraph)) {
                outcome.matches.push(m);
            }
        }
        if let Some(near) = chunk.nearest {
            if nearest.as_ref().is_none_or(|best| better(near.0, best.0)) {
                nearest = Some(near);
            }
        }
    }
    outcome.nearest = nearest.map(|(_, m)| m);
    Ok(outcome)
}

fn search_range(
    target: &ReconstructionTarget,
    pairs: &[(usize, usize)],
    range: std::ops::Range<u64>,
    opts: SolverOptions,
) -> ChunkResult {
    let n = target.n;
    let row_width = n - 1;
    let row_mask = (1u64 << row_width) - 1;
    let mut out = ChunkResult { visited: 0, candidates: 0, matches: Vec::new(), nearest: None };

    for mask in range {
        if let Some(m) = target.m {
            if mask.count_ones() as usize != m {
                continue;
            }
        }
        out.visited += 1;

        // outdegree of vertex i is the popcount of its block of n-1 bits
        let degrees = (0..n).map(|i| ((mask >> (i * row_width)) & row_mask).count_ones() as usize);
        let (lo, hi) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        if target.max_outdeg.is_some_and(|d| d != hi) || target.min_outdeg.is_some_and(|d| d != lo) {
            continue;
        }
        let arcs = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]);
        let g = Digraph::from_arc_list(n, arcs).expect("non-empty mask gives a valid digraph");
        if (target.require_strong || target.require_g_star) && !g.is_strongly_connected() {
            continue;
        }
        if target.require_g_star && !g.classify().is_in_g_star_class {
            continue;
        }
        out.candidates += 1;

        let row = BoundContext::new(&g).all();
        let bound_dev = target.bound_deviation(&row);
        // the bound columns alone give a lower bound on the full score
        let lower = (target.bound_mismatches(&row), bound_dev);
        let best = out.nearest.as_ref().map(|b| b.0);
        if bound_dev > target.tolerance && best.is_some_and(|b| !better(lower, b)) {
            continue;
        }
        let Ok(result) = spectral::spectral_radius(&g, opts) else { continue };
        let score = target.score(result.q, &row);
        let found = ReconstructionMatch { digraph: g, q: result.q, max_deviation: score.1, row };
        if score.1 <= target.tolerance {
            out.matches.push(found.clone());
        }
        if best.is_none_or(|b| better(score, b)) {
            out.nearest = Some((score, found));
        }
    }
    out
}
