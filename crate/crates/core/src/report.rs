//! Rendering of per-digraph reports, sweep reports and reconstruction
//! results as aligned text, CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bounds::{BoundContext, BoundId, BoundValue};
use crate::digraph::{Classification, Digraph};
use crate::edgelist;
use crate::error::Result;
use crate::spectral::{self, SolverOptions, SpectralResult};
use crate::verify::{ReconstructionMatch, ReconstructionOutcome, RowComparison, SweepReport};

/// A bound is marked as attained when it is this close to `q`.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" | "tree" | "json-like-tree" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

fn fixed(v: f64) -> String {
    format!("{v:.4}")
}

/// Everything computed for one digraph.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub max_outdeg: usize,
    pub min_outdeg: usize,
    pub classification: Classification,
    pub spectral: SpectralResult,
    pub bounds: Vec<BoundValue>,
    pub comparison: Option<(String, RowComparison)>,
}

impl Report {
    pub fn compute(g: &Digraph, opts: SolverOptions) -> Result<Self> {
        let spectral = spectral::spectral_radius(g, opts)?;
        let ctx = BoundContext::new(g);
        let p = ctx.profile();
        Ok(Report {
            n: g.vertex_count(),
            m: g.arc_count(),
            max_outdeg: p.max_outdeg,
            min_outdeg: p.min_outdeg,
            classification: g.classify(),
            bounds: ctx.all(),
            spectral,
            comparison: None,
        })
    }

    pub fn is_equality(&self, b: &BoundValue) -> bool {
        b.value().is_some_and(|v| (v - self.spectral.q).abs() <= EQUALITY_TOL)
    }

    fn flags(&self) -> Vec<&'static str> {
        let c = &self.classification;
        [
            (c.is_strongly_connected, "strongly_connected"),
            (c.is_regular, "regular"),
            (c.is_directed_cycle, "directed_cycle"),
            (c.is_bidirectional_star, "bidirectional_star"),
            (c.is_bipartite_semiregular, "bipartite_semiregular"),
            (c.is_in_g_star_class, "g_star_class"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("json values serialize") + "\n",
        }
    }

    fn render_table(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "n = {}, m = {}, max outdegree = {}, min outdegree = {}",
            self.n, self.m, self.max_outdeg, self.min_outdeg
        )
        .unwrap();
        let flags = self.flags();
        writeln!(s, "flags: {}", if flags.is_empty() { "none".to_string() } else { flags.join(", ") }).unwrap();
        writeln!(
            s,
            "q(G) = {} (residual {:.1e}, {} iterations, {} components)",
            fixed(self.spectral.q),
            self.spectral.residual,
            self.spectral.iterations,
            self.spectral.per_component.len()
        )
        .unwrap();
        s.push('\n');

        let mut head = vec![format!("{:>8}", "q(G)")];
        let mut vals = vec![format!("{:>8}", fixed(self.spectral.q))];
        for b in &self.bounds {
            head.push(format!("{:>8}", b.id.label()));
            vals.push(format!("{:>8}", b.value().map_or("-".to_string(), fixed)));
        }
        writeln!(s, "{}", head.join("")).unwrap();
        writeln!(s, "{}", vals.join("")).unwrap();
        s.push('\n');

        for b in &self.bounds {
            let detail = match &b.outcome {
                Ok((_, w)) => {
                    let mut d = w.to_string();
                    if self.is_equality(b) {
                        d.push_str("  [= q]");
                    }
                    d
                }
                Err(why) => format!("inapplicable: {why}"),
            };
            writeln!(s, "{:<6}{:>10}  {}", b.id.label(), b.value().map_or("-".to_string(), fixed), detail).unwrap();
        }
        if let Some((name, cmp)) = &self.comparison {
            s.push('\n');
            s.push_str(&render_comparison_table(name, cmp));
        }
        s
    }

    fn render_csv(&self) -> String {
        let mut s = String::from("column,value,applicable,equality,detail\n");
        writeln!(s, "q,{},true,,", fixed(self.spectral.q)).unwrap();
        for b in &self.bounds {
            let detail = match &b.outcome {
                Ok((_, w)) => w.to_string(),
                Err(why) => why.to_string(),
            };
            writeln!(
                s,
                "{},{},{},{},\"{}\"",
                b.id.label(),
                b.value().map_or(String::new(), fixed),
                b.is_applicable(),
                self.is_equality(b),
                detail.replace('"', "'")
            )
            .unwrap();
        }
        if let Some((name, cmp)) = &self.comparison {
            for e in &cmp.entries {
                writeln!(
                    s,
                    "{name}:{},{},expected,{},\"computed {}\"",
                    e.column,
                    fixed(e.expected),
                    e.deviation() <= cmp.tolerance,
                    e.computed.map_or("-".into(), fixed)
                )
                .unwrap();
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let c = &self.classification;
        let mut v = json!({
            "graph": {
                "n": self.n,
                "m": self.m,
                "max_outdeg": self.max_outdeg,
                "min_outdeg": self.min_outdeg,
                "classification": {
                    "strongly_connected": c.is_strongly_connected,
                    "regular": c.is_regular,
                    "directed_cycle": c.is_directed_cycle,
                    "bidirectional_star": c.is_bidirectional_star,
                    "bipartite_semiregular": c.is_bipartite_semiregular,
                    "g_star_class": c.is_in_g_star_class,
                },
            },
            "spectral": {
                "q": self.spectral.q,
                "residual": self.spectral.residual,
                "iterations": self.spectral.iterations,
                "per_component": self.spectral.per_component.iter().map(|&(id, r)| json!([id, r])).collect::<Vec<_>>(),
            },
            "bounds": self.bounds.iter().map(|b| bound_json(b, self.is_equality(b))).collect::<Vec<_>>(),
        });
        if let Some((name, cmp)) = &self.comparison {
            v["comparison"] = comparison_json(name, cmp);
        }
        v
    }
}

fn bound_json(b: &BoundValue, equality: bool) -> Value {
    match &b.outcome {
        Ok((value, w)) => json!({
            "id": b.id.label(),
            "name": b.id.name(),
            "value": value,
            "witness": w.to_string(),
            "equality": equality,
        }),
        Err(why) => json!({
            "id": b.id.label(),
            "name": b.id.name(),
            "value": Value::Null,
            "reason": why.to_string(),
        }),
    }
}

fn comparison_json(name: &str, cmp: &RowComparison) -> Value {
    json!({
        "target": name,
        "tolerance": cmp.tolerance,
        "max_deviation": finite_or_null(cmp.max_deviation()),
        "matches": cmp.matches(),
        "entries": cmp.entries.iter().map(|e| json!({
            "column": e.column,
            "expected": e.expected,
            "computed": e.computed,
            "deviation": finite_or_null(e.deviation()),
        })).collect::<Vec<_>>(),
    })
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

/// Expected versus computed values, one line per column.
pub fn render_comparison_table(name: &str, cmp: &RowComparison) -> String {
    let mut s = String::new();
    writeln!(s, "comparison with {name} (tolerance {:e})", cmp.tolerance).unwrap();
    writeln!(s, "{:<8}{:>10}{:>10}{:>12}", "column", "expected", "computed", "deviation").unwrap();
    for e in &cmp.entries {
        let dev = e.deviation();
        writeln!(
            s,
            "{:<8}{:>10}{:>10}{:>12}{}",
            e.column,
            fixed(e.expected),
            e.computed.map_or("-".into(), fixed),
            if dev.is_finite() { format!("{dev:.2e}") } else { "inf".into() },
            if dev > cmp.tolerance { "  MISMATCH" } else { "" }
        )
        .unwrap();
    }
    writeln!(s, "{}", if cmp.matches() { "row matches" } else { "row does not match" }).unwrap();
    s
}

pub fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "corpus": report.description,
                "graphs": report.graphs,
                "checks": report.checks,
                "invariants": report.invariants.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                "passed": report.passed(),
                "warnings": report.warnings,
                "failures": report.failures.iter().map(|f| json!({
                    "graph": f.graph_index,
                    "invariant": f.invariant.to_string(),
                    "detail": f.detail,
                    "edge_list": f.edge_list,
                })).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("graph,invariant,detail\n");
            for f in &report.failures {
                writeln!(s, "{},{},\"{}\"", f.graph_index, f.invariant, f.detail.replace('"', "'")).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "corpus: {}", report.description).unwrap();
            for w in &report.warnings {
                writeln!(s, "warning: {w}").unwrap();
            }
            writeln!(s, "{} graphs, {} checks, {} failures", report.graphs, report.checks, report.failures.len())
                .unwrap();
            for f in &report.failures {
                writeln!(s, "FAIL graph {} {}: {}", f.graph_index, f.invariant, f.detail).unwrap();
                for line in f.edge_list.lines() {
                    writeln!(s, "    {line}").unwrap();
                }
            }
            writeln!(s, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
            s
        }
    }
}

fn match_comparison(out: &ReconstructionOutcome, m: &ReconstructionMatch) -> RowComparison {
    let t = &out.target;
    let mut entries = Vec::new();
    if let Some(want) = t.expected_q {
        entries.push(crate::verify::RowEntry { column: "q".into(), expected: want, computed: Some(m.q) });
    }
    for &(id, want) in &t.expected {
        let computed = m.row.iter().find(|b| b.id == id).and_then(|b| b.value());
        entries.push(crate::verify::RowEntry { column: id.label().into(), expected: want, computed });
    }
    RowComparison { tolerance: t.tolerance, entries }
}

pub fn render_reconstruction(out: &ReconstructionOutcome, format: Format) -> String {
    match format {
        Format::Json => {
            let m_json = |m: &ReconstructionMatch| {
                json!({
                    "edge_list": edgelist::serialize(&m.digraph),
                    "q": m.q,
                    "max_deviation": finite_or_null(m.max_deviation),
                    "row": m.row.iter().map(|b| bound_json(b, b.value().is_some_and(|v| (v - m.q).abs() <= EQUALITY_TOL))).collect::<Vec<_>>(),
                })
            };
            let v = json!({
                "target": out.target.name,
                "visited": out.visited,
                "candidates": out.candidates,
                "matches": out.matches.iter().map(m_json).collect::<Vec<_>>(),
                "nearest": out.nearest.as_ref().map(m_json),
            });
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("match,q");
            for id in BoundId::TABLE_ORDER {
                write!(s, ",{}", id.label()).unwrap();
            }
            s.push_str(",max_deviation,arcs\n");
            for (k, m) in out.matches.iter().enumerate() {
                write!(s, "{},{}", k + 1, fixed(m.q)).unwrap();
                for b in &m.row {
                    write!(s, ",{}", b.value().map_or(String::new(), fixed)).unwrap();
                }
                let arcs: Vec<String> = m.digraph.arcs().iter().map(|&(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
                writeln!(s, ",{:.2e},{}", m.max_deviation, arcs.join(" ")).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(
                s,
                "target {}: visited {} arc sets, {} met the constraints, {} matches up to isomorphism",
                out.target.name,
                out.visited,
                out.candidates,
                out.matches.len()
            )
            .unwrap();
            for (k, m) in out.matches.iter().enumerate() {
                writeln!(s, "\n# match {} (q = {}, max deviation {:.2e})", k + 1, fixed(m.q), m.max_deviation).unwrap();
                s.push_str(&edgelist::serialize(&m.digraph));
            }
            if out.matches.is_empty() {
                match &out.nearest {
                    Some(m) => {
                        writeln!(s, "\nno match; nearest candidate (max deviation {:.2e}):", m.max_deviation).unwrap();
                        s.push_str(&edgelist::serialize(&m.digraph));
                        s.push_str(&render_comparison_table(&out.target.name, &match_comparison(out, m)));
                    }
                    None => writeln!(s, "\nno candidate met the structural constraints").unwrap(),
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn star_report_marks_equality() {
        let r = Report::compute(&generate::bidirectional_star(4).unwrap(), SolverOptions::default()).unwrap();
        let text = r.render(Format::Table);
        assert!(text.contains("q(G) = 4.0000"));
        let thm31 = text.lines().find(|l| l.starts_with("(27)")).unwrap();
        assert!(thm31.contains("4.0000") && thm31.contains("[= q]"), "{thm31}");
        let cm = text.lines().find(|l| l.starts_with("(cm)")).unwrap();
        assert!(!cm.contains("[= q]"));
    }

    #[test]
    fn json_and_table_agree() {
        let g = generate::random_strongly_connected(7, 0.3, 5).unwrap();
        let r = Report::compute(&g, SolverOptions::default()).unwrap();
        let v = r.to_json();
        let csv = r.render(Format::Csv);
        for (k, b) in v["bounds"].as_array().unwrap().iter().enumerate() {
            let label = b["id"].as_str().unwrap();
            let line = csv.lines().nth(k + 2).unwrap();
            assert!(line.starts_with(&format!("{label},")));
            if let Some(x) = b["value"].as_f64() {
                assert_eq!(line.split(',').nth(1).unwrap(), format!("{x:.4}"));
            }
        }
        assert_eq!(v["spectral"]["q"].as_f64(), Some(r.spectral.q));
    }

    #[test]
    fn format_names() {
        assert_eq!("json".parse::<Format>(), Ok(Format::Json));
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
