//! Named reproductions of concrete claims, each with a pass/fail outcome and
//! a human-readable report.

use super::checks::{
    classify_edge_additions, contraction, join_deletion, matching_tally, ratio_chain, transitive_inequalities,
};
use super::{Analysis, Status};
use crate::census::{census, census_containing, RootConstraint};
use crate::error::{Error, Result};
use crate::families::{build_family, FamilySpec};
use crate::generate::{generate_connected, generate_trees};
use crate::graph::{Edge, Graph};
use crate::numeric::{ratio, ratio_string, sig12, to_f64, Ratio};
use rayon::prelude::*;
use std::cmp::Ordering;

pub const REPRO_NAMES: [&str; 9] = [
    "barbell-14-6-additions",
    "barbell-14-6-matchings",
    "dstar-16-5-local",
    "dbstar-23-8-local",
    "join-deletion-2-6",
    "join-deletion-10-9",
    "ratio-chain-n8",
    "tree-contraction-n10",
    "transitive-suite",
];

/// Reproductions on graphs above 20 vertices, run only on request.
pub const SLOW_REPROS: [&str; 1] = ["dbstar-23-8-local"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReproReport {
    pub name: String,
    pub reproduced: bool,
    pub lines: Vec<String>,
}

pub fn is_slow(name: &str) -> bool {
    SLOW_REPROS.contains(&name)
}

fn show(r: &Ratio) -> String {
    format!("{} ({})", ratio_string(r), sig12(to_f64(r)))
}

pub fn run_repro(name: &str, allow_slow: bool) -> Result<ReproReport> {
    if !REPRO_NAMES.contains(&name) {
        return Err(Error::Unknown {
            kind: "reproduction",
            name: name.to_string(),
        });
    }
    if is_slow(name) && !allow_slow {
        return Err(Error::InvalidParameter(format!("{name} is slow-tagged; pass --slow to run it")));
    }
    let (reproduced, lines) = match name {
        "barbell-14-6-additions" => barbell_additions()?,
        "barbell-14-6-matchings" => barbell_matchings()?,
        "dstar-16-5-local" => local_reversal(FamilySpec::ModifiedBarbell { n: 16, w: 5, a: 1 })?,
        "dbstar-23-8-local" => local_reversal(FamilySpec::ModifiedDoubleBroom { n: 23, w: 8, a: 1 })?,
        "join-deletion-2-6" => join(2, 6)?,
        "join-deletion-10-9" => join(10, 9)?,
        "ratio-chain-n8" => ratio_chain_exhaustive(8)?,
        "tree-contraction-n10" => tree_contraction(10)?,
        "transitive-suite" => transitive_suite()?,
        _ => unreachable!(),
    };
    Ok(ReproReport {
        name: name.to_string(),
        reproduced,
        lines,
    })
}

fn barbell_additions() -> Result<(bool, Vec<String>)> {
    let g = build_family(&FamilySpec::Barbell { n: 14, w: 6 })?;
    let mu = census(&g)?.mu()?;
    let classes = classify_edge_additions(&g)?;
    let positive = classes.iter().filter(|c| c.change == Ordering::Greater).count();
    let mut lines = vec![
        format!("D(14,6): mu = {}", show(&mu)),
        format!(
            "{} non-edges in {} isomorphism classes of G+e",
            g.non_edges().len(),
            classes.len()
        ),
    ];
    for c in &classes {
        lines.push(format!(
            "  class of {:?} (size {}): mu(G+e) = {} [{}]",
            c.representative,
            c.size,
            show(&c.mu_after),
            match c.change {
                Ordering::Greater => "increase",
                Ordering::Less => "decrease",
                Ordering::Equal => "equal",
            }
        ));
    }
    lines.push(format!("classes with mu(G+e) > mu(G): {positive} (expected 1)"));
    Ok((positive == 1, lines))
}

fn barbell_matchings() -> Result<(bool, Vec<String>)> {
    let g = build_family(&FamilySpec::Barbell { n: 14, w: 6 })?;
    let t = matching_tally(&g)?;
    let lines = vec![
        format!(
            "D(14,6): {} maximal matchings of the complement, {} classes of G+M",
            t.matchings, t.classes
        ),
        format!(
            "decrease {} / unchanged {} / increase {} (expected all decrease)",
            t.decrease, t.unchanged, t.increase
        ),
    ];
    Ok((t.matchings > 0 && t.decrease == t.matchings, lines))
}

/// `μ(G)`, `μ(G, v)` and `μ(G, e)` for each edge at `v`.
pub type LocalReversal = (Ratio, Ratio, Vec<(Edge, Ratio)>);

/// Means for the added path vertex `v` (the last vertex of a `⋆1` family),
/// where the expected order is `μ(G) > μ(G, v) > μ(G, e)`.
pub fn local_reversal_means(g: &Graph) -> Result<LocalReversal> {
    let v = g.order() - 1;
    let c = census(g)?;
    let mu = c.mu()?;
    let mu_v = c.mu_at_vertex(v)?;
    let edges = g
        .neighbors(v)
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|u| {
            let (cn, cr) = census_containing(g, &RootConstraint::edge(u, v))?;
            Ok(((u.min(v), u.max(v)), ratio(&cr, &cn)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((mu, mu_v, edges))
}

fn local_reversal(spec: FamilySpec) -> Result<(bool, Vec<String>)> {
    let g = build_family(&spec)?;
    let (mu, mu_v, edges) = local_reversal_means(&g)?;
    let v = g.order() - 1;
    let mut lines = vec![
        format!("{spec}: v1 = vertex {v} (degree {})", g.degree(v)),
        format!("mu(G)     = {}", show(&mu)),
        format!("mu(G, v1) = {}", show(&mu_v)),
    ];
    let mut ok = mu_v < mu;
    for (e, m) in &edges {
        lines.push(format!("mu(G, {e:?}) = {}", show(m)));
        ok &= *m < mu_v;
    }
    lines.push(format!(
        "mu(G) > mu(G, v1) > mu(G, e) for both edges at v1: {}",
        if ok { "yes" } else { "no" }
    ));
    Ok((ok && edges.len() == 2, lines))
}

fn join(n: u64, m: u64) -> Result<(bool, Vec<String>)> {
    let r = join_deletion(n, m)?;
    let minus = r.mu_minus_clique_edge.clone().expect("n >= 2");
    let mut lines = vec![
        format!("K_{n} join {m}K_1: mu(G) = {}", show(&r.mu)),
        format!("clique edge deleted: mu(G-e) = {}", show(&minus)),
    ];
    if let Some(x) = &r.mu_minus_cross_edge {
        lines.push(format!("clique-independent edge deleted: mu(G-e) = {}", show(x)));
    }
    lines.push(format!(
        "share of edges whose deletion raises mu: {} ({})",
        ratio_string(&r.increasing_fraction),
        sig12(to_f64(&r.increasing_fraction))
    ));
    Ok((r.mu < minus, lines))
}

fn ratio_chain_exhaustive(max_n: usize) -> Result<(bool, Vec<String>)> {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 1..=max_n {
        let gs = generate_connected(n)?;
        let bad = gs
            .par_iter()
            .map(|g| Ok(ratio_chain(&Analysis::new(g)?)?.violation))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .filter(|&b| b)
            .count();
        lines.push(format!("n = {n}: {} graphs, {bad} violations", gs.len()));
        ok &= bad == 0;
    }
    Ok((ok, lines))
}

fn tree_contraction(max_n: usize) -> Result<(bool, Vec<String>)> {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 2..=max_n {
        let ts = generate_trees(n)?;
        let verdicts = ts
            .par_iter()
            .map(|t| contraction(&Analysis::new(t)?))
            .collect::<Result<Vec<_>>>()?;
        let failed = verdicts.iter().filter(|v| v.status == Status::Fails).count();
        let equal = verdicts
            .iter()
            .filter(|v| v.witness["equality_edges"].as_array().is_some_and(|a| !a.is_empty()))
            .count();
        lines.push(format!(
            "n = {n}: {} trees, {failed} failures, {equal} with a gap of exactly 1/3",
            ts.len()
        ));
        ok &= failed == 0 && equal == 1;
    }
    Ok((ok, lines))
}

/// The vertex- and edge-transitive graphs covered by the suite.
pub fn transitive_family() -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = (3..=12).map(|n| FamilySpec::Cycle { n }).collect();
    out.extend((2..=10).map(|n| FamilySpec::Clique { n }));
    out.extend((1..=4).map(|n| FamilySpec::CompleteBipartite { a: n, b: n }));
    out.push(FamilySpec::Petersen);
    out
}

fn transitive_suite() -> Result<(bool, Vec<String>)> {
    let specs = transitive_family();
    let results = specs
        .par_iter()
        .map(|spec| {
            let g = build_family(spec)?;
            transitive_inequalities(&Analysis::with_id(&g, spec.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ok = true;
    let mut lines = Vec::new();
    for v in results {
        ok &= v.status == Status::Holds;
        lines.push(format!(
            "{}: {} (mu = {}, mu_v = {}, mu_e = {})",
            v.graph,
            v.status,
            v.mu.as_deref().unwrap_or("-"),
            v.witness["mu_v"].as_str().unwrap_or("-"),
            v.witness["mu_e"].as_str().unwrap_or("-"),
        ));
    }
    Ok((ok, lines))
}
