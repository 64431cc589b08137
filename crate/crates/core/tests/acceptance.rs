//! Acceptance checks, one per criterion, each printing a
//! `criterion k: PASS|FAIL` line. Runs without the test harness so the lines
//! always reach the output: `cargo test --test acceptance`.

mod support;

use std::time::{Duration, Instant};

use signless::bounds::{self, BoundContext, BoundId, DegreeWeight};
use signless::cli;
use signless::verify::{self, CorpusSpec, Invariant, Preset, TABLE_TOL};
use signless::{edgelist, generate, spectral, SolverOptions};

use support::{all_digraphs, oracle_radius, G2_NEAR_MATCH};

/// Spectral radius of the analytic families.
const FAMILY_TOL: f64 = 1e-9;
/// Solver against the characteristic-polynomial oracle.
const ORACLE_TOL: f64 = 1e-6;
/// `q <= bound + DOMINANCE_TOL`.
const DOMINANCE_TOL: f64 = 1e-9;
/// Weighted bound identities.
const WEIGHT_TOL: f64 = 1e-12;

const FAMILY_BUDGET: Duration = Duration::from_secs(1);
const GSTAR_BUDGET: Duration = Duration::from_secs(10);
const G1_BUDGET: Duration = Duration::from_secs(60);
const SWEEP_BUDGET: Duration = Duration::from_secs(120);

fn corpus() -> CorpusSpec {
    CorpusSpec { count: 500, n_min: 3, n_max: 12, probabilities: vec![0.2, 0.3, 0.5], seed: 42 }
}

fn report(k: u32, ok: bool, detail: &str) {
    let detail = detail.trim_end_matches(" []");
    println!("criterion {k}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn criterion_1_analytic_families() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for n in 3..=10 {
        let cycle = generate::directed_cycle(n).unwrap();
        let q = spectral::q_of(&cycle).unwrap();
        if !close(q, 2.0, FAMILY_TOL) {
            problems.push(format!("cycle n={n}: q={q}"));
        }

        let star = generate::bidirectional_star(n).unwrap();
        let q = spectral::q_of(&star).unwrap();
        if !close(q, n as f64, FAMILY_TOL) {
            problems.push(format!("star n={n}: q={q}"));
        }
        let t31 = bounds::bound_thm31(&star).value();
        if t31 != Some(n as f64) {
            problems.push(format!("star n={n}: (27)={t31:?}"));
        }
    }
    for k in 3..=6 {
        let g = generate::bidirectional_complete(k).unwrap();
        let want = 2.0 * (k as f64 - 1.0);
        let q = spectral::q_of(&g).unwrap();
        if !close(q, want, FAMILY_TOL) {
            problems.push(format!("K{k}: q={q}"));
        }
        for b in [bounds::bound_thm31(&g), bounds::bound_thm32(&g), bounds::bound_deg_plus_avg(&g)] {
            if b.value() != Some(want) {
                problems.push(format!("K{k}: {}={:?}", b.id.label(), b.value()));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > FAMILY_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    report(1, problems.is_empty(), &format!("cycles, stars, complete digraphs in {elapsed:?} {problems:?}"));
    assert!(problems.is_empty(), "{problems:?}");
}

fn criterion_2_gstar_reconstruction() {
    let start = Instant::now();
    let out = verify::reconstruct(&Preset::GStar.target(), SolverOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    if out.visited != 220 {
        problems.push(format!("visited {} arc sets", out.visited));
    }
    if out.matches.is_empty() {
        problems.push("no match".into());
    }
    for m in &out.matches {
        let g = &m.digraph;
        let ctx = BoundContext::new(g);
        let one = ctx.arc_deg_sum().value();
        let cm = ctx.delta_plus_2().value();
        let ok = g.is_strongly_connected()
            && g.classify().is_in_g_star_class
            && close(m.q, 4.7321, TABLE_TOL)
            && one == Some(6.0)
            && cm == Some(5.0)
            && verify::remark_check(g).cm_beats_arc_deg_sum == Some(true);
        if !ok {
            problems.push(format!("match {:?}: q={} (1)={one:?} (cm)={cm:?}", g.arcs(), m.q));
        }
    }
    if elapsed > GSTAR_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    report(
        2,
        problems.is_empty(),
        &format!("{} arc sets, {} class(es) matched in {elapsed:?} {problems:?}", out.visited, out.matches.len()),
    );
    assert!(problems.is_empty(), "{problems:?}");
}

fn criterion_3_g1_reconstruction() {
    let start = Instant::now();
    let target = Preset::G1.target();
    let out = verify::reconstruct(&target, SolverOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    if out.visited != 4095 {
        problems.push(format!("visited {} arc sets", out.visited));
    }
    if out.matches.is_empty() {
        let nearest = out.nearest.as_ref().map(|n| n.max_deviation);
        problems.push(format!("no match, nearest deviation {nearest:?}"));
    }
    for m in &out.matches {
        let cmp = target.compare(&m.digraph, SolverOptions::default()).unwrap();
        if cmp.entries.len() != 12 || !cmp.matches() {
            problems.push(format!("match {:?} deviates by {}", m.digraph.arcs(), cmp.max_deviation()));
        }
    }
    if elapsed > G1_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    report(
        3,
        problems.is_empty(),
        &format!("{} class(es) match all 12 values within {TABLE_TOL} in {elapsed:?} {problems:?}", out.matches.len()),
    );
    assert!(problems.is_empty(), "{problems:?}");
}

/// The reference G₂ row cannot be matched in full: the nearest 6-vertex
/// digraphs agree in eleven columns and have (27) = 5.0 where the row says
/// 5.5. The conditional property is checked on the compare path instead:
/// the preset compares all twelve values, reports each deviation, and fails
/// exactly the columns that disagree.
fn criterion_4_g2_preset() {
    let g = edgelist::parse(G2_NEAR_MATCH).unwrap();
    let cmp = Preset::G2.target().compare(&g, SolverOptions::default()).unwrap();
    let mismatched: Vec<&str> = cmp.mismatched().map(|e| e.column.as_str()).collect();

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = ["signless", "compute", "--edges", &G2_NEAR_MATCH.replace('\n', ";"), "--preset", "g2"];
    let code = cli::run(args, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();

    // every column is printed with its expected and computed value
    let all_columns = BoundId::ELEVEN.iter().all(|id| text.contains(id.label()));
    let problems: Vec<String> = [
        (cmp.entries.len() == 12, "twelve compared values".to_string()),
        (mismatched == ["(27)"], format!("only (27) deviates, got {mismatched:?}")),
        (code == cli::EXIT_FAILED, format!("compute exits {}, got {code}", cli::EXIT_FAILED)),
        (all_columns, "all columns rendered".to_string()),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, what)| what)
    .collect();

    let dev27 = cmp.entries.iter().find(|e| e.column == "(27)").map(|e| e.deviation());
    report(
        4,
        problems.is_empty(),
        &format!(
            "preset compares 12 values; nearest 6-vertex digraph matches 11 within {TABLE_TOL}, \
             (27) off by {dev27:?} (reference 5.5 is inconsistent with n=6, m=11) {problems:?}"
        ),
    );
    assert!(problems.is_empty(), "{problems:?}\n{text}");
}

fn criterion_5_dominance_sweep() {
    let start = Instant::now();
    let invariants =
        [Invariant::Dominance, Invariant::QBracket, Invariant::DegInverseBracket, Invariant::OvalContainment];
    let rep = verify::sweep(&corpus(), &invariants, SolverOptions::default()).unwrap();

    // independent restatement of the inequalities on the same corpus
    let graphs = corpus().generate().unwrap();
    let mut problems: Vec<String> =
        rep.failures.iter().map(|f| format!("#{} {}: {}", f.graph_index, f.invariant, f.detail)).collect();
    for (k, g) in graphs.iter().enumerate() {
        let q = spectral::q_of(g).unwrap();
        for b in bounds::all_bounds(g) {
            if let Some(v) = b.value() {
                if q > v + DOMINANCE_TOL {
                    problems.push(format!("#{k}: q={q} > {}={v}", b.id.label()));
                }
            }
        }
        let p = g.degree_profile();
        let (lo, hi) = (2.0 * p.min_outdeg as f64, 2.0 * p.max_outdeg as f64);
        if q < lo - DOMINANCE_TOL || q > hi + DOMINANCE_TOL {
            problems.push(format!("#{k}: q={q} outside [{lo}, {hi}]"));
        }
        let sums: Vec<f64> = (0..g.vertex_count()).map(|i| p.outdeg[i] as f64 + p.avg_two_outdeg[i].unwrap()).collect();
        let (slo, shi) = sums.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &s| (a.min(s), b.max(s)));
        if q < slo - DOMINANCE_TOL || q > shi + DOMINANCE_TOL {
            problems.push(format!("#{k}: q={q} outside [{slo}, {shi}]"));
        }
        if !spectral::oval_containment(g, q).unwrap().contained {
            problems.push(format!("#{k}: q outside every oval"));
        }
    }
    let elapsed = start.elapsed();
    if graphs.len() != 500 || !graphs.iter().all(|g| g.is_strongly_connected()) {
        problems.push("corpus is not 500 strongly connected digraphs".into());
    }
    if elapsed > SWEEP_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    report(
        5,
        problems.is_empty(),
        &format!("{} checks on {} digraphs in {elapsed:?} {problems:?}", rep.checks, rep.graphs),
    );
    assert!(problems.is_empty(), "{problems:?}");
}

fn criterion_6_oracle_equivalence() {
    let mut problems = Vec::new();
    let mut strong = 0;
    let mut worst = 0.0f64;
    let mut check = |g: &signless::Digraph, problems: &mut Vec<String>| {
        let q = spectral::q_of(g).unwrap();
        let want = oracle_radius(g);
        worst = worst.max((q - want).abs());
        if !close(q, want, ORACLE_TOL) {
            problems.push(format!("{:?}: solver {q}, oracle {want}", g.arcs()));
        }
    };
    for n in 2..=4 {
        for g in all_digraphs(n).filter(|g| g.is_strongly_connected()) {
            strong += 1;
            check(&g, &mut problems);
        }
    }
    let mut reducible = 0;
    let mut seed = 0u64;
    while reducible < 200 {
        let n = 2 + (seed % 5) as usize;
        let p = [0.2, 0.35, 0.5][(seed / 5 % 3) as usize];
        let g = generate::random_digraph(n, p, seed).unwrap();
        seed += 1;
        if g.is_strongly_connected() {
            continue;
        }
        reducible += 1;
        check(&g, &mut problems);
    }
    report(
        6,
        problems.is_empty(),
        &format!("{strong} strongly connected + {reducible} reducible digraphs, worst gap {worst:.2e} {problems:?}"),
    );
    assert!(problems.is_empty(), "{problems:?}");
}

fn criterion_7_collapse_and_homogeneity() {
    let graphs = corpus().generate().unwrap();
    let mut problems = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        let one = |_: usize, _: usize| 1.0;
        let collapsed = bounds::bound_generic_f(g, &one).unwrap().value();
        if collapsed != bounds::bound_arc_deg_sum(g).value() {
            problems.push(format!("#{k}: f=1 gives {collapsed:?}"));
        }
        for w in DegreeWeight::ALL {
            let f = w.on(g);
            let base = bounds::bound_generic_f(g, &f).unwrap().value().unwrap();
            for c in [0.5, 3.0] {
                let f = &f;
                let scaled = move |i: usize, j: usize| c * f(i, j);
                let v = bounds::bound_generic_f(g, &scaled).unwrap().value().unwrap();
                if !close(v, base, WEIGHT_TOL) {
                    problems.push(format!("#{k}: {w:?} scaled by {c}: {v} vs {base}"));
                }
            }
            let closed = BoundContext::new(g).evaluate(w.corollary()).value().unwrap();
            if base > closed + WEIGHT_TOL {
                problems.push(format!("#{k}: {w:?} {base} > {closed}"));
            }
            if w == DegreeWeight::DegSum && base != closed {
                problems.push(format!("#{k}: d_i+d_j weight {base} != {closed}"));
            }
        }
    }
    let rep = verify::sweep_graphs(
        "corpus",
        &graphs,
        &[Invariant::Collapse, Invariant::Homogeneity, Invariant::CauchySchwarz],
        SolverOptions::default(),
    );
    problems.extend(rep.failures.iter().map(|f| format!("#{} {}: {}", f.graph_index, f.invariant, f.detail)));
    report(7, problems.is_empty(), &format!("{} digraphs, 4 weights, c in {{0.5, 3}} {problems:?}", graphs.len()));
    assert!(problems.is_empty(), "{problems:?}");
}

fn criterion_8_rankings() {
    let mut problems = Vec::new();
    let g1 = verify::reconstruct(&Preset::G1.target(), SolverOptions::default()).unwrap();
    if g1.matches.is_empty() {
        problems.push("no G1 match".to_string());
    }
    for m in &g1.matches {
        let r = verify::remark_check(&m.digraph);
        if r.smallest() != Some(BoundId::OvalAvg) || !r.strict_minimum() {
            problems.push(format!("G1 minimum {:?}", r.ranking.first()));
        }
        if r.second_smallest() != Some(BoundId::CorDegSum) {
            problems.push(format!("G1 second {:?}", r.ranking.get(1)));
        }
    }

    // the reference row itself, and the closest digraph to it
    let row = Preset::G2.target().expected;
    let row_min = row.iter().min_by(|a, b| a.1.total_cmp(&b.1)).map(|e| e.0);
    if row_min != Some(BoundId::CorSqrtProd) {
        problems.push(format!("G2 reference minimum {row_min:?}"));
    }
    let g2 = edgelist::parse(G2_NEAR_MATCH).unwrap();
    let r = verify::remark_check(&g2);
    if r.smallest() != Some(BoundId::CorSqrtProd) {
        problems.push(format!("G2 minimum {:?}", r.ranking.first()));
    }
    report(8, problems.is_empty(), &format!("G1: (3) < (35) < rest; G2: (32) smallest {problems:?}"));
    assert!(problems.is_empty(), "{problems:?}");
}

fn main() {
    let criteria: [fn(); 8] = [
        criterion_1_analytic_families,
        criterion_2_gstar_reconstruction,
        criterion_3_g1_reconstruction,
        criterion_4_g2_preset,
        criterion_5_dominance_sweep,
        criterion_6_oracle_equivalence,
        criterion_7_collapse_and_homogeneity,
        criterion_8_rankings,
    ];
    let failed = criteria.iter().filter(|c| std::panic::catch_unwind(**c).is_err()).count();
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
