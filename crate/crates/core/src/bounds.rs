//! Upper bounds on the signless Laplacian spectral radius `q(G)` in terms of
//! outdegrees `d_i`, average 2-outdegrees `m_i`, the extreme outdegrees
//! `Δ⁺`, `δ⁺` and the arc count `m`.
//!
//! Every bound either yields a value, with the arc, vertex or branch that
//! attains it, or is reported inapplicable together with the hypothesis that
//! failed. Ties go to the first candidate in lexicographic order.

use std::fmt;

use crate::digraph::{DegreeProfile, Digraph};
use crate::error::{Error, Result};

/// Identifies one bound. The label is the short tag used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// `max_{(i,j)} d_i + d_j`
    ArcDegSum,
    /// `max_i d_i + m_i`
    DegPlusAvg,
    /// `max_{(i,j)} (d_i + d_j + √((d_i - d_j)² + 4 m_i m_j)) / 2`
    OvalAvg,
    /// `max_i d_i + √(Σ_{j → i} d_j)`, summing over in-neighbours
    IndegSqrt,
    /// Minimum over the non-increasing outdegree sequence.
    HongYou,
    /// `max{Δ⁺ + δ⁺ - 1 + (m - δ⁺(n-1))/Δ⁺, δ⁺ + 1 + (m - δ⁺(n-1))/2}`
    Thm31,
    /// `Δ⁺ + 2` when `δ⁺ = 1` and `Δ⁺ >= (m - (n-1))/2`
    DeltaPlus2,
    /// Like `OvalAvg` with `m_i m_j` replaced by `√(d_i m_i)·√(d_j m_j)`.
    Thm32,
    /// Arc-weighted bound for a caller-supplied weight function.
    GenericF,
    /// Weight `√(d_i d_j)`
    CorSqrtProd,
    /// Weight `d_i + d_j`
    CorDegSum,
    /// Weight `√(d_i + d_j)`
    CorSqrtSum,
    /// Weight `√d_i + √d_j`
    CorSumSqrt,
}

impl BoundId {
    /// Column order of the bound table: (1) (2) (3) (4) (5) (27) (28) (32)
    /// (35) (33) (34), followed by (cm).
    pub const TABLE_ORDER: [BoundId; 12] = [
        BoundId::ArcDegSum,
        BoundId::DegPlusAvg,
        BoundId::OvalAvg,
        BoundId::IndegSqrt,
        BoundId::HongYou,
        BoundId::Thm31,
        BoundId::Thm32,
        BoundId::CorSqrtProd,
        BoundId::CorDegSum,
        BoundId::CorSqrtSum,
        BoundId::CorSumSqrt,
        BoundId::DeltaPlus2,
    ];

    /// The eleven columns compared against each other in the examples table.
    pub const ELEVEN: [BoundId; 11] = [
        BoundId::ArcDegSum,
        BoundId::DegPlusAvg,
        BoundId::OvalAvg,
        BoundId::IndegSqrt,
        BoundId::HongYou,
        BoundId::Thm31,
        BoundId::Thm32,
        BoundId::CorSqrtProd,
        BoundId::CorDegSum,
        BoundId::CorSqrtSum,
        BoundId::CorSumSqrt,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundId::ArcDegSum => "(1)",
            BoundId::DegPlusAvg => "(2)",
            BoundId::OvalAvg => "(3)",
            BoundId::IndegSqrt => "(4)",
            BoundId::HongYou => "(5)",
            BoundId::Thm31 => "(27)",
            BoundId::DeltaPlus2 => "(cm)",
            BoundId::Thm32 => "(28)",
            BoundId::GenericF => "(29)",
            BoundId::CorSqrtProd => "(32)",
            BoundId::CorDegSum => "(35)",
            BoundId::CorSqrtSum => "(33)",
            BoundId::CorSumSqrt => "(34)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundId::ArcDegSum => "arc_deg_sum",
            BoundId::DegPlusAvg => "deg_plus_avg",
            BoundId::OvalAvg => "oval_avg",
            BoundId::IndegSqrt => "indeg_sqrt",
            BoundId::HongYou => "hong_you",
            BoundId::Thm31 => "thm31",
            BoundId::DeltaPlus2 => "delta_plus_2",
            BoundId::Thm32 => "thm32",
            BoundId::GenericF => "generic_f",
            BoundId::CorSqrtProd => "cor_f_sqrtprod",
            BoundId::CorDegSum => "cor_f_degsum",
            BoundId::CorSqrtSum => "cor_f_sqrtsum",
            BoundId::CorSumSqrt => "cor_f_sumsqrt",
        }
    }

    /// Accepts either the label (`"(35)"`, `"35"`, `"cm"`) or the name.
    pub fn parse(s: &str) -> Option<BoundId> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        BoundId::TABLE_ORDER
            .iter()
            .chain(std::iter::once(&BoundId::GenericF))
            .copied()
            .find(|id| id.label().trim_start_matches('(').trim_end_matches(')') == t || id.name() == t)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Where the max (or min) of a bound is attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Arc(usize, usize),
    Vertex(usize),
    /// Position in the non-increasing outdegree order (Hong–You).
    SortedIndex(usize),
    /// Which of the two expressions of the `max{·,·}` is larger (0 or 1).
    Branch(usize),
    /// Closed form without a max.
    Formula,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, like the edge-list files
        match *self {
            Witness::Arc(i, j) => write!(f, "arc {}->{}", i + 1, j + 1),
            Witness::Vertex(v) => write!(f, "vertex {}", v + 1),
            Witness::SortedIndex(k) => write!(f, "index {}", k + 1),
            Witness::Branch(b) => write!(f, "branch {}", b + 1),
            Witness::Formula => f.write_str("formula"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inapplicable {
    NotStronglyConnected,
    TooFewVertices {
        n: usize,
        required: usize,
    },
    /// `δ⁺ = 1` and `Δ⁺ >= (m - (n-1))/2` are needed.
    CorollaryHypothesis {
        max_outdeg: usize,
        min_outdeg: usize,
        arcs: usize,
        n: usize,
    },
    ZeroOutdegreeHead {
        arc: (usize, usize),
    },
    NonPositiveWeight {
        arc: (usize, usize),
    },
    NoPositiveOutdegree,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inapplicable::NotStronglyConnected => f.write_str("not strongly connected"),
            Inapplicable::TooFewVertices { n, required } => write!(f, "needs n >= {required}, got {n}"),
            Inapplicable::CorollaryHypothesis { max_outdeg, min_outdeg, arcs, n } => write!(
                f,
                "needs min outdegree 1 and 2*max outdegree >= m-(n-1); have min {min_outdeg}, max {max_outdeg}, m {arcs}, n {n}"
            ),
            Inapplicable::ZeroOutdegreeHead { arc } => {
                write!(f, "arc {}->{} ends at a vertex of outdegree 0", arc.0 + 1, arc.1 + 1)
            }
            Inapplicable::NonPositiveWeight { arc } => {
                write!(f, "weight not positive on arc {}->{}", arc.0 + 1, arc.1 + 1)
            }
            Inapplicable::NoPositiveOutdegree => f.write_str("no vertex has positive outdegree"),
        }
    }
}

/// Evaluated bound, or the reason it does not apply.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub id: BoundId,
    pub outcome: std::result::Result<(f64, Witness), Inapplicable>,
}

impl BoundValue {
    fn ok(id: BoundId, value: f64, witness: Witness) -> Self {
        BoundValue { id, outcome: Ok((value, witness)) }
    }

    fn na(id: BoundId, why: Inapplicable) -> Self {
        BoundValue { id, outcome: Err(why) }
    }

    pub fn value(&self) -> Option<f64> {
        self.outcome.as_ref().ok().map(|&(v, _)| v)
    }

    pub fn witness(&self) -> Option<Witness> {
        self.outcome.as_ref().ok().map(|&(_, w)| w)
    }

    pub fn reason(&self) -> Option<&Inapplicable> {
        self.outcome.as_ref().err()
    }

    pub fn is_applicable(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Nonnegative weight on vertex pairs, required positive on arcs.
pub trait ArcWeight: Sync {
    fn weight(&self, i: usize, j: usize) -> f64;
}

impl<F> ArcWeight for F
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    fn weight(&self, i: usize, j: usize) -> f64 {
        self(i, j)
    }
}

/// The four degree-based weights whose arc-weighted bounds have closed
/// forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeWeight {
    SqrtProd,
    DegSum,
    SqrtSum,
    SumSqrt,
}

impl DegreeWeight {
    pub const ALL: [DegreeWeight; 4] =
        [DegreeWeight::SqrtProd, DegreeWeight::DegSum, DegreeWeight::SqrtSum, DegreeWeight::SumSqrt];

    pub fn eval(self, di: f64, dj: f64) -> f64 {
        match self {
            DegreeWeight::SqrtProd => (di * dj).sqrt(),
            DegreeWeight::DegSum => di + dj,
            DegreeWeight::SqrtSum => (di + dj).sqrt(),
            DegreeWeight::SumSqrt => di.sqrt() + dj.sqrt(),
        }
    }

    /// The closed-form corollary bound this weight induces.
    pub fn corollary(self) -> BoundId {
        match self {
            DegreeWeight::SqrtProd => BoundId::CorSqrtProd,
            DegreeWeight::DegSum => BoundId::CorDegSum,
            DegreeWeight::SqrtSum => BoundId::CorSqrtSum,
            DegreeWeight::SumSqrt => BoundId::CorSumSqrt,
        }
    }

    /// Weight function on the vertices of `g`.
    pub fn on(self, g: &Digraph) -> impl Fn(usize, usize) -> f64 + Sync + '_ {
        move |i, j| self.eval(g.outdegree(i) as f64, g.outdegree(j) as f64)
    }
}

/// Degree data of one digraph, shared by all bound evaluators.
pub struct BoundContext<'g> {
    g: &'g Digraph,
    p: DegreeProfile,
    strong: bool,
}

impl<'g> BoundContext<'g> {
    pub fn new(g: &'g Digraph) -> Self {
        BoundContext { g, p: g.degree_profile(), strong: g.is_strongly_connected() }
    }

    pub fn digraph(&self) -> &Digraph {
        self.g
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.p
    }

    fn d(&self, v: usize) -> f64 {
        self.p.outdeg[v] as f64
    }

    fn t(&self, v: usize) -> f64 {
        self.p.two_outdeg[v] as f64
    }

    /// `m_v`; only called where `d_v > 0`.
    fn avg(&self, v: usize) -> f64 {
        self.t(v) / self.d(v)
    }

    fn require_strong(&self) -> std::result::Result<(), Inapplicable> {
        if self.strong {
            Ok(())
        } else {
            Err(Inapplicable::NotStronglyConnected)
        }
    }

    fn require_positive_heads(&self) -> std::result::Result<(), Inapplicable> {
        match self.g.arcs().iter().find(|&&(_, j)| self.p.outdeg[j] == 0) {
            Some(&arc) => Err(Inapplicable::ZeroOutdegreeHead { arc }),
            None => Ok(()),
        }
    }

    fn max_over_arcs(&self, id: BoundId) -> BoundValue {
        let mut best: Option<(f64, Witness)> = None;
        for &(i, j) in self.g.arcs() {
            let v = self.arc_term(id, i, j);
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, Witness::Arc(i, j)));
            }
        }
        let (v, w) = best.expect("digraphs have at least one arc");
        BoundValue::ok(id, v, w)
    }

    /// Per-arc expression of an arc-maximised bound.
    fn arc_term(&self, id: BoundId, i: usize, j: usize) -> f64 {
        let (di, dj) = (self.d(i), self.d(j));
        match id {
            BoundId::ArcDegSum => di + dj,
            BoundId::OvalAvg => {
                let (mi, mj) = (self.avg(i), self.avg(j));
                (di + dj + ((di - dj).powi(2) + 4.0 * mi * mj).sqrt()) / 2.0
            }
            BoundId::Thm32 => {
                // d_i m_i = t_i
                let prod = self.t(i).sqrt() * self.t(j).sqrt();
                (di + dj + ((di - dj).powi(2) + 4.0 * prod).sqrt()) / 2.0
            }
            BoundId::CorSqrtProd => di * (self.avg(i) / dj).sqrt() + dj * (self.avg(j) / di).sqrt(),
            // d_i (d_i + m_i) = d_i² + t_i
            BoundId::CorDegSum => (di * di + self.t(i) + dj * dj + self.t(j)) / (di + dj),
            BoundId::CorSqrtSum => (di * (di + self.avg(i)).sqrt() + dj * (dj + self.avg(j)).sqrt()) / (di + dj).sqrt(),
            BoundId::CorSumSqrt => {
                (di * (di.sqrt() + self.avg(i).sqrt()) + dj * (dj.sqrt() + self.avg(j).sqrt()))
                    / (di.sqrt() + dj.sqrt())
            }
            other => unreachable!("{other:?} is not maximised over arcs"),
        }
    }

    fn vertex_term(&self, id: BoundId, v: usize) -> f64 {
        match id {
            BoundId::DegPlusAvg => self.d(v) + self.avg(v),
            BoundId::IndegSqrt => {
                let s: usize = self.g.in_neighbors(v).iter().map(|&u| self.p.outdeg[u]).sum();
                self.d(v) + (s as f64).sqrt()
            }
            other => unreachable!("{other:?} is not maximised over vertices"),
        }
    }

    fn sorted_outdegrees(&self) -> Vec<f64> {
        let mut s: Vec<usize> = self.p.outdeg.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s.into_iter().map(|d| d as f64).collect()
    }

    fn hong_you_term(sorted: &[f64], i: usize) -> f64 {
        let (d1, di) = (sorted[0], sorted[i]);
        let excess: f64 = sorted[..i].iter().map(|dk| dk - di).sum();
        (d1 + 2.0 * di - 1.0 + ((2.0 * di - d1 + 1.0).powi(2) + 8.0 * excess).sqrt()) / 2.0
    }

    fn thm31_terms(&self) -> [f64; 2] {
        let n = self.g.vertex_count() as f64;
        let (big, small, m) = (self.p.max_outdeg as f64, self.p.min_outdeg as f64, self.p.arc_count as f64);
        let slack = m - small * (n - 1.0);
        [big + small - 1.0 + slack / big, small + 1.0 + slack / 2.0]
    }

    pub fn arc_deg_sum(&self) -> BoundValue {
        match self.require_strong() {
            Ok(()) => self.max_over_arcs(BoundId::ArcDegSum),
            Err(e) => BoundValue::na(BoundId::ArcDegSum, e),
        }
    }

    /// Sinks are skipped: `m_i` is undefined there.
    pub fn deg_plus_avg(&self) -> BoundValue {
        let id = BoundId::DegPlusAvg;
        let mut best: Option<(f64, Witness)> = None;
        for v in (0..self.g.vertex_count()).filter(|&v| self.p.outdeg[v] > 0) {
            let t = self.vertex_term(id, v);
            if best.is_none_or(|(b, _)| t > b) {
                best = Some((t, Witness::Vertex(v)));
            }
        }
        match best {
            Some((v, w)) => BoundValue::ok(id, v, w),
            None => BoundValue::na(id, Inapplicable::NoPositiveOutdegree),
        }
    }

    pub fn oval_avg(&self) -> BoundValue {
        match self.require_strong() {
            Ok(()) => self.max_over_arcs(BoundId::OvalAvg),
            Err(e) => BoundValue::na(BoundId::OvalAvg, e),
        }
    }

    pub fn indeg_sqrt(&self) -> BoundValue {
        let id = BoundId::IndegSqrt;
        if let Err(e) = self.require_strong() {
            return BoundValue::na(id, e);
        }
        let mut best = (f64::NEG_INFINITY, 0);
        for v in 0..self.g.vertex_count() {
            let t = self.vertex_term(id, v);
            if t > best.0 {
                best = (t, v);
            }
        }
        BoundValue::ok(id, best.0, Witness::Vertex(best.1))
    }

    pub fn hong_you(&self) -> BoundValue {
        let sorted = self.sorted_outdegrees();
        let mut best = (f64::INFINITY, 0);
        for i in 0..sorted.len() {
            let t = Self::hong_you_term(&sorted, i);
            if t < best.0 {
                best = (t, i);
            }
        }
        BoundValue::ok(BoundId::HongYou, best.0, Witness::SortedIndex(best.1))
    }

    pub fn thm31(&self) -> BoundValue {
        let id = BoundId::Thm31;
        if let Err(e) = self.require_strong() {
            return BoundValue::na(id, e);
        }
        let n = self.g.vertex_count();
        if n < 3 {
            return BoundValue::na(id, Inapplicable::TooFewVertices { n, required: 3 });
        }
        let [a, b] = self.thm31_terms();
        if b > a {
            BoundValue::ok(id, b, Witness::Branch(1))
        } else {
            BoundValue::ok(id, a, Witness::Branch(0))
        }
    }

    pub fn delta_plus_2(&self) -> BoundValue {
        let id = BoundId::DeltaPlus2;
        if let Err(e) = self.require_strong() {
            return BoundValue::na(id, e);
        }
        let n = self.g.vertex_count();
        if n < 3 {
            return BoundValue::na(id, Inapplicable::TooFewVertices { n, required: 3 });
        }
        let p = &self.p;
        if p.min_outdeg != 1 || 2 * p.max_outdeg + n - 1 < p.arc_count {
            return BoundValue::na(
                id,
                Inapplicable::CorollaryHypothesis {
                    max_outdeg: p.max_outdeg,
                    min_outdeg: p.min_outdeg,
                    arcs: p.arc_count,
                    n,
                },
            );
        }
        BoundValue::ok(id, p.max_outdeg as f64 + 2.0, Witness::Formula)
    }

    pub fn thm32(&self) -> BoundValue {
        match self.require_strong() {
            Ok(()) => self.max_over_arcs(BoundId::Thm32),
            Err(e) => BoundValue::na(BoundId::Thm32, e),
        }
    }

    /// Closed-form corollary bound for one of the degree weights.
    pub fn corollary(&self, w: DegreeWeight) -> BoundValue {
        let id = w.corollary();
        match self.require_positive_heads() {
            Ok(()) => self.max_over_arcs(id),
            Err(e) => BoundValue::na(id, e),
        }
    }

    /// `max_{(i,j)} (Σ_{k ∈ N_i⁺} f(i,k) + Σ_{k ∈ N_j⁺} f(j,k)) / f(i,j)`.
    pub fn generic_f<W: ArcWeight + ?Sized>(&self, f: &W) -> BoundValue {
        let id = BoundId::GenericF;
        let n = self.g.vertex_count();
        let mut out_weight = vec![0.0; n];
        for &(i, k) in self.g.arcs() {
            let w = f.weight(i, k);
            if w.is_nan() || w <= 0.0 {
                return BoundValue::na(id, Inapplicable::NonPositiveWeight { arc: (i, k) });
            }
            out_weight[i] += w;
        }
        let mut best: Option<(f64, Witness)> = None;
        for &(i, j) in self.g.arcs() {
            let v = (out_weight[i] + out_weight[j]) / f.weight(i, j);
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, Witness::Arc(i, j)));
            }
        }
        let (v, w) = best.expect("digraphs have at least one arc");
        BoundValue::ok(id, v, w)
    }

    pub fn evaluate(&self, id: BoundId) -> BoundValue {
        match id {
            BoundId::ArcDegSum => self.arc_deg_sum(),
            BoundId::DegPlusAvg => self.deg_plus_avg(),
            BoundId::OvalAvg => self.oval_avg(),
            BoundId::IndegSqrt => self.indeg_sqrt(),
            BoundId::HongYou => self.hong_you(),
            BoundId::Thm31 => self.thm31(),
            BoundId::DeltaPlus2 => self.delta_plus_2(),
            BoundId::Thm32 => self.thm32(),
            BoundId::GenericF => self.generic_f(&|_: usize, _: usize| 1.0),
            BoundId::CorSqrtProd => self.corollary(DegreeWeight::SqrtProd),
            BoundId::CorDegSum => self.corollary(DegreeWeight::DegSum),
            BoundId::CorSqrtSum => self.corollary(DegreeWeight::SqrtSum),
            BoundId::CorSumSqrt => self.corollary(DegreeWeight::SumSqrt),
        }
    }

    /// Re-evaluates the single term a witness points at. Returns `None` when
    /// the witness kind does not fit the bound or the bound is the caller's
    /// own weighted bound.
    pub fn term_at(&self, id: BoundId, witness: Witness) -> Option<f64> {
        match (id, witness) {
            (BoundId::GenericF, _) => None,
            (BoundId::DegPlusAvg | BoundId::IndegSqrt, Witness::Vertex(v)) => Some(self.vertex_term(id, v)),
            (BoundId::HongYou, Witness::SortedIndex(i)) => Some(Self::hong_you_term(&self.sorted_outdegrees(), i)),
            (BoundId::Thm31, Witness::Branch(b)) if b < 2 => Some(self.thm31_terms()[b]),
            (BoundId::DeltaPlus2, Witness::Formula) => Some(self.p.max_outdeg as f64 + 2.0),
            (
                BoundId::ArcDegSum
                | BoundId::OvalAvg
                | BoundId::Thm32
                | BoundId::CorSqrtProd
                | BoundId::CorDegSum
                | BoundId::CorSqrtSum
                | BoundId::CorSumSqrt,
                Witness::Arc(i, j),
            ) if self.g.has_arc(i, j) => Some(self.arc_term(id, i, j)),
            _ => None,
        }
    }

    /// Every bound in [`BoundId::TABLE_ORDER`].
    pub fn all(&self) -> Vec<BoundValue> {
        BoundId::TABLE_ORDER.iter().map(|&id| self.evaluate(id)).collect()
    }
}

pub fn bound_arc_deg_sum(g: &Digraph) -> BoundValue {
    BoundContext::new(g).arc_deg_sum()
}

pub fn bound_deg_plus_avg(g: &Digraph) -> BoundValue {
    BoundContext::new(g).deg_plus_avg()
}

pub fn bound_oval_avg(g: &Digraph) -> BoundValue {
    BoundContext::new(g).oval_avg()
}

pub fn bound_indeg_sqrt(g: &Digraph) -> BoundValue {
    BoundContext::new(g).indeg_sqrt()
}

pub fn bound_hong_you(g: &Digraph) -> BoundValue {
    BoundContext::new(g).hong_you()
}

pub fn bound_thm31(g: &Digraph) -> BoundValue {
    BoundContext::new(g).thm31()
}

pub fn bound_delta_plus_2(g: &Digraph) -> BoundValue {
    BoundContext::new(g).delta_plus_2()
}

pub fn bound_thm32(g: &Digraph) -> BoundValue {
    BoundContext::new(g).thm32()
}

pub fn bound_cor32(g: &Digraph) -> BoundValue {
    BoundContext::new(g).corollary(DegreeWeight::SqrtProd)
}

pub fn bound_cor35(g: &Digraph) -> BoundValue {
    BoundContext::new(g).corollary(DegreeWeight::DegSum)
}

pub fn bound_cor33(g: &Digraph) -> BoundValue {
    BoundContext::new(g).corollary(DegreeWeight::SqrtSum)
}

pub fn bound_cor34(g: &Digraph) -> BoundValue {
    BoundContext::new(g).corollary(DegreeWeight::SumSqrt)
}

/// Arc-weighted bound for a weight positive on every arc.
pub fn bound_generic_f<W: ArcWeight + ?Sized>(g: &Digraph, f: &W) -> Result<BoundValue> {
    let b = BoundContext::new(g).generic_f(f);
    match b.reason() {
        Some(&Inapplicable::NonPositiveWeight { arc }) => Err(Error::NonPositiveWeight(arc.0, arc.1)),
        _ => Ok(b),
    }
}

/// All bounds in table order, (cm) last.
pub fn all_bounds(g: &Digraph) -> Vec<BoundValue> {
    BoundContext::new(g).all()
}
