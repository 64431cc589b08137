//! Property sweeps, table-row reconstruction and bound rankings.

pub mod canon;
pub mod reconstruct;
pub mod sweep;

pub use canon::canonical_form;
pub use reconstruct::{
    reconstruct, ReconstructionMatch, ReconstructionOutcome, ReconstructionTarget, RowComparison, RowEntry, TABLE_TOL,
};
pub use sweep::{sweep, sweep_graphs, CorpusSpec, Invariant, SweepFailure, SweepReport};

use crate::bounds::{BoundContext, BoundId};
use crate::digraph::Digraph;

/// Reference bound rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `G*(9,4,3,1)`: 4 vertices, 9 arcs.
    GStar,
    /// 4-vertex example of the bound comparison table.
    G1,
    /// 6-vertex example of the bound comparison table.
    G2,
}

/// Column values of the G₁ and G₂ rows in [`BoundId::ELEVEN`] order.
const G1_ROW: [f64; 11] = [4.0000, 3.5000, 3.3028, 3.4142, 3.5616, 3.5000, 3.5651, 3.4495, 3.3333, 3.6029, 3.5731];
const G2_ROW: [f64; 11] = [5.0000, 4.6667, 4.6016, 5.0000, 4.7321, 5.5000, 4.7913, 4.5644, 4.6000, 4.7956, 4.7866];

impl Preset {
    pub fn parse(s: &str) -> Option<Preset> {
        match s.to_ascii_lowercase().as_str() {
            "gstar" | "g*" => Some(Preset::GStar),
            "g1" => Some(Preset::G1),
            "g2" => Some(Preset::G2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::GStar => "gstar",
            Preset::G1 => "g1",
            Preset::G2 => "g2",
        }
    }

    pub fn target(self) -> ReconstructionTarget {
        match self {
            Preset::GStar => {
                let mut t = ReconstructionTarget::new("gstar", 4);
                t.m = Some(9);
                t.max_outdeg = Some(3);
                t.min_outdeg = Some(1);
                t.require_strong = true;
                t.require_g_star = true;
                t.expected_q = Some(4.7321);
                t.expected = vec![(BoundId::ArcDegSum, 6.0), (BoundId::DeltaPlus2, 5.0)];
                t
            }
            Preset::G1 => {
                let mut t = ReconstructionTarget::new("g1", 4);
                t.expected_q = Some(3.0000);
                t.expected = BoundId::ELEVEN.iter().copied().zip(G1_ROW).collect();
                t
            }
            Preset::G2 => {
                let mut t = ReconstructionTarget::new("g2", 6);
                t.expected_q = Some(4.1984);
                t.expected = BoundId::ELEVEN.iter().copied().zip(G2_ROW).collect();
                t
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemarkReport {
    pub in_g_star_class: bool,
    /// `Some(true)` when (cm) <= (1); `None` when either does not apply.
    pub cm_beats_arc_deg_sum: Option<bool>,
    /// Applicable bounds among [`BoundId::ELEVEN`], smallest first; ties
    /// keep table order.
    pub ranking: Vec<(BoundId, f64)>,
}

impl RemarkReport {
    pub fn smallest(&self) -> Option<BoundId> {
        self.ranking.first().map(|&(id, _)| id)
    }

    pub fn second_smallest(&self) -> Option<BoundId> {
        self.ranking.get(1).map(|&(id, _)| id)
    }

    /// The smallest bound is strictly below every other one.
    pub fn strict_minimum(&self) -> bool {
        match self.ranking.as_slice() {
            [first, second, ..] => first.1 < second.1,
            [_] => true,
            [] => false,
        }
    }
}

/// Compares (cm) with (1) and ranks the eleven table bounds.
pub fn remark_check(g: &Digraph) -> RemarkReport {
    let ctx = BoundContext::new(g);
    let cm = ctx.delta_plus_2().value();
    let one = ctx.arc_deg_sum().value();
    let mut ranking: Vec<(BoundId, f64)> =
        BoundId::ELEVEN.iter().filter_map(|&id| ctx.evaluate(id).value().map(|v| (id, v))).collect();
    ranking.sort_by(|a, b| a.1.total_cmp(&b.1));
    RemarkReport {
        in_g_star_class: g.classify().is_in_g_star_class,
        cm_beats_arc_deg_sum: cm.zip(one).map(|(a, b)| a <= b),
        ranking,
    }
}
