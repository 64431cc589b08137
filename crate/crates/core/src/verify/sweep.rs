//! Invariant sweeps over seeded corpora of digraphs.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{BoundContext, BoundId, DegreeWeight};
use crate::digraph::Digraph;
use crate::edgelist;
use crate::error::{Error, Result};
use crate::generate;
use crate::spectral::{self, Similarity, SolverOptions};

/// `q <= bound + DOMINANCE_TOL`, also used for the row-sum brackets and the
/// equality cases.
pub const DOMINANCE_TOL: f64 = 1e-9;
/// Arc-weighted bound versus its closed form, and scaling invariance.
pub const WEIGHT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    /// `Σ d⁺ = Σ d⁻ = m`, and `t_i = d_i m_i`.
    DegreeSums,
    /// Row sums of `Q` bracket `q`, i.e. `2δ⁺ <= q <= 2Δ⁺`.
    QBracket,
    /// Row sums `d_i + m_i` of `D⁻¹QD` bracket `q` (strongly connected only).
    DegInverseBracket,
    /// `q` lies in an oval of `D^{-1/2} Q D^{1/2}` and exceeds `Δ⁺`
    /// (strongly connected only).
    OvalContainment,
    /// `q <= bound` for every applicable bound.
    Dominance,
    /// The arc-weighted bound with a constant weight equals bound (1).
    Collapse,
    /// The arc-weighted bound is unchanged when the weight is scaled.
    Homogeneity,
    /// The arc-weighted bound never exceeds its closed-form corollary, with
    /// equality for the weight `d_i + d_j`.
    CauchySchwarz,
    /// Regular digraphs have `q = 2Δ⁺`.
    RegularRadius,
    /// Known equality cases of (27) and (28).
    EqualityCases,
    /// (cm) <= (1) on the G* class.
    GStarRemark,
    /// Reported witnesses reproduce the reported values.
    WitnessValidity,
}

impl Invariant {
    pub const ALL: [Invariant; 12] = [
        Invariant::DegreeSums,
        Invariant::QBracket,
        Invariant::DegInverseBracket,
        Invariant::OvalContainment,
        Invariant::Dominance,
        Invariant::Collapse,
        Invariant::Homogeneity,
        Invariant::CauchySchwarz,
        Invariant::RegularRadius,
        Invariant::EqualityCases,
        Invariant::GStarRemark,
        Invariant::WitnessValidity,
    ];
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Seeded corpus of random strongly connected digraphs.
///
/// Graph `k` has `n` drawn uniformly from `n_min..=n_max`, arc probability
/// `probabilities[k % len]`, and its own seed, all drawn from one master
/// generator seeded with `seed`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub probabilities: Vec<f64>,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!(
                "vertex range {}..{} must satisfy 2 <= min <= max",
                self.n_min, self.n_max
            )));
        }
        if self.probabilities.is_empty() || self.probabilities.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidParameter("arc probabilities must be non-empty and lie in [0, 1]".into()));
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Vec<Digraph>> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|k| {
                let n = rng.gen_range(self.n_min..=self.n_max);
                let p = self.probabilities[k % self.probabilities.len()];
                let seed: u64 = rng.gen();
                generate::random_strongly_connected(n, p, seed)
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let ps: Vec<String> = self.probabilities.iter().map(|p| p.to_string()).collect();
        format!(
            "{} random strongly connected digraphs, n in {}..={}, p in {{{}}}, seed {}",
            self.count,
            self.n_min,
            self.n_max,
            ps.join(", "),
            self.seed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFailure {
    pub graph_index: usize,
    pub invariant: Invariant,
    pub detail: String,
    /// The offending digraph in edge-list format.
    pub edge_list: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub description: String,
    pub graphs: usize,
    pub checks: usize,
    pub invariants: Vec<Invariant>,
    pub failures: Vec<SweepFailure>,
    pub warnings: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generates the corpus and checks every invariant on every digraph.
pub fn sweep(spec: &CorpusSpec, invariants: &[Invariant], opts: SolverOptions) -> Result<SweepReport> {
    let graphs = spec.generate()?;
    let mut report = sweep_graphs(&spec.describe(), &graphs, invariants, opts);
    if spec.count == 0 {
        report.warnings.push("empty corpus: nothing was checked".into());
    }
    Ok(report)
}

/// Checks the invariants on an explicit list of digraphs. Results do not
/// depend on the thread count.
pub fn sweep_graphs(
    description: &str,
    graphs: &[Digraph],
    invariants: &[Invariant],
    opts: SolverOptions,
) -> SweepReport {
    let per_graph: Vec<(usize, Vec<SweepFailure>)> =
        graphs.par_iter().enumerate().map(|(idx, g)| check_graph(idx, g, invariants, opts)).collect();
    let mut checks = 0;
    let mut failures = Vec::new();
    for (c, f) in per_graph {
        checks += c;
        failures.extend(f);
    }
    SweepReport {
        description: description.to_string(),
        graphs: graphs.len(),
        checks,
        invariants: invariants.to_vec(),
        failures,
        warnings: Vec::new(),
    }
}

struct Checker<'a> {
    idx: usize,
    g: &'a Digraph,
    checks: usize,
    failures: Vec<SweepFailure>,
}

impl Checker<'_> {
    fn check(&mut self, invariant: Invariant, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(SweepFailure {
                graph_index: self.idx,
                invariant,
                detail: detail(),
                edge_list: edgelist::serialize(self.g),
            });
        }
    }
}

fn check_graph(idx: usize, g: &Digraph, invariants: &[Invariant], opts: SolverOptions) -> (usize, Vec<SweepFailure>) {
    let mut c = Checker { idx, g, checks: 0, failures: Vec::new() };
    let q = match spectral::spectral_radius(g, opts) {
        Ok(r) => r.q,
        Err(e) => {
            c.check(Invariant::QBracket, false, || format!("spectral radius failed: {e}"));
            return (c.checks, c.failures);
        }
    };
    let ctx = BoundContext::new(g);
    let p = ctx.profile();
    let class = g.classify();
    let strong = class.is_strongly_connected;
    let row = ctx.all();
    let value_of = |id: BoundId| row.iter().find(|b| b.id == id).and_then(|b| b.value());

    for &inv in invariants {
        match inv {
            Invariant::DegreeSums => {
                let out: usize = p.outdeg.iter().sum();
                let inn: usize = p.indeg.iter().sum();
                c.check(inv, out == p.arc_count && inn == p.arc_count, || {
                    format!("Σd⁺ = {out}, Σd⁻ = {inn}, m = {}", p.arc_count)
                });
                let consistent = (0..g.vertex_count()).all(|v| match p.avg_two_outdeg[v] {
                    Some(m) => (m * p.outdeg[v] as f64 - p.two_outdeg[v] as f64).abs() <= 1e-9,
                    None => p.outdeg[v] == 0,
                });
                c.check(inv, consistent, || "m_i·d_i differs from t_i".into());
            }
            Invariant::QBracket => {
                let (lo, hi) = spectral::row_sum_bracket(spectral::build_q(g).matrix());
                c.check(inv, lo - DOMINANCE_TOL <= q && q <= hi + DOMINANCE_TOL, || {
                    format!("q = {q} outside row-sum bracket [{lo}, {hi}]")
                });
                let (lo, hi) = (2.0 * p.min_outdeg as f64, 2.0 * p.max_outdeg as f64);
                c.check(inv, lo - DOMINANCE_TOL <= q && q <= hi + DOMINANCE_TOL, || {
                    format!("q = {q} outside [2δ⁺, 2Δ⁺] = [{lo}, {hi}]")
                });
            }
            Invariant::DegInverseBracket if strong => {
                let m = spectral::similarity_transform(g, Similarity::DegInverse).expect("positive outdegrees");
                let (lo, hi) = spectral::row_sum_bracket(&m);
                c.check(inv, lo - DOMINANCE_TOL <= q && q <= hi + DOMINANCE_TOL, || {
                    format!("q = {q} outside [min, max] of d_i + m_i = [{lo}, {hi}]")
                });
            }
            Invariant::OvalContainment if strong => {
                let hit = spectral::oval_containment(g, q).expect("strongly connected");
                c.check(inv, hit.contained, || format!("q = {q} lies in no oval"));
                // the ovals are centred at the outdegrees; q sits strictly right of all of them
                let top = p.max_outdeg as f64;
                c.check(inv, q > top, || format!("q = {q} not above Δ⁺ = {top}"));
            }
            Invariant::Dominance => {
                for b in &row {
                    if let Some(v) = b.value() {
                        c.check(inv, q <= v + DOMINANCE_TOL, || format!("q = {q} exceeds {} = {v}", b.id));
                    }
                }
                for w in DegreeWeight::ALL {
                    if let Some(v) = ctx.generic_f(&w.on(g)).value() {
                        c.check(inv, q <= v + DOMINANCE_TOL, || format!("q = {q} exceeds (29) with {w:?} = {v}"));
                    }
                }
            }
            Invariant::Collapse => {
                let unit = ctx.generic_f(&|_: usize, _: usize| 1.0).value();
                let deg_sum =
                    g.arcs().iter().map(|&(i, j)| (p.outdeg[i] + p.outdeg[j]) as f64).fold(f64::MIN, f64::max);
                c.check(inv, unit == Some(deg_sum), || {
                    format!("(29) with f = 1 gives {unit:?}, max d_i + d_j = {deg_sum}")
                });
                if strong {
                    c.check(inv, unit == value_of(BoundId::ArcDegSum), || {
                        format!("(29) with f = 1 gives {unit:?}, (1) = {:?}", value_of(BoundId::ArcDegSum))
                    });
                }
            }
            Invariant::Homogeneity => {
                for w in DegreeWeight::ALL {
                    let f = w.on(g);
                    let Some(base) = ctx.generic_f(&f).value() else { continue };
                    for scale in [0.5, 3.0] {
                        let scaled = ctx.generic_f(&|i: usize, j: usize| scale * f(i, j)).value();
                        c.check(inv, scaled.is_some_and(|s| (s - base).abs() <= WEIGHT_TOL), || {
                            format!("(29) with {w:?}: {base} vs {scaled:?} after scaling by {scale}")
                        });
                    }
                }
            }
            Invariant::CauchySchwarz => {
                for w in DegreeWeight::ALL {
                    let (Some(exact), Some(closed)) = (ctx.generic_f(&w.on(g)).value(), ctx.corollary(w).value())
                    else {
                        continue;
                    };
                    c.check(inv, exact <= closed + WEIGHT_TOL, || {
                        format!("(29) with {w:?} = {exact} exceeds {} = {closed}", w.corollary())
                    });
                    if w == DegreeWeight::DegSum {
                        c.check(inv, exact == closed, || format!("(29) with d_i + d_j = {exact} but (35) = {closed}"));
                    }
                }
            }
            Invariant::RegularRadius if class.is_regular => {
                let expect = 2.0 * p.max_outdeg as f64;
                c.check(inv, (q - expect).abs() <= DOMINANCE_TOL, || format!("regular but q = {q} != 2Δ⁺ = {expect}"));
            }
            Invariant::EqualityCases => {
                let thm31 = value_of(BoundId::Thm31);
                let thm32 = value_of(BoundId::Thm32);
                let close = |v: Option<f64>| v.is_some_and(|v| (v - q).abs() <= DOMINANCE_TOL);
                if strong && g.vertex_count() >= 3 && class.is_regular && !class.is_directed_cycle {
                    c.check(inv, close(thm31), || format!("regular: (27) = {thm31:?}, q = {q}"));
                }
                if class.is_bidirectional_star {
                    c.check(inv, close(thm31), || format!("star: (27) = {thm31:?}, q = {q}"));
                }
                if strong && (class.is_regular || class.is_bipartite_semiregular) {
                    c.check(inv, close(thm32), || format!("(28) = {thm32:?}, q = {q}"));
                }
            }
            Invariant::GStarRemark if class.is_in_g_star_class => {
                let (cm, one) = (value_of(BoundId::DeltaPlus2), value_of(BoundId::ArcDegSum));
                c.check(inv, matches!((cm, one), (Some(a), Some(b)) if a <= b), || {
                    format!("G* member with (cm) = {cm:?}, (1) = {one:?}")
                });
            }
            Invariant::WitnessValidity => {
                for b in &row {
                    if let Ok((v, w)) = b.outcome {
                        let again = ctx.term_at(b.id, w);
                        c.check(inv, again == Some(v), || {
                            format!("{} witness {w} gives {again:?}, reported {v}", b.id)
                        });
                    }
                }
            }
            _ => {}
        }
    }
    (c.checks, c.failures)
}
