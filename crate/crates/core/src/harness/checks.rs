//! The individual checks. Every comparison is exact.

use super::{Analysis, CheckKind, CheckVerdict, Outcome};
use crate::canon::canonical_form;
use crate::census::{average_connected_set_size, census, census_containing, edge_census, RootConstraint};
use crate::closed_forms::{join_counts, mu_complete, n_complete, s_k_complete, star_subtree_count, JoinSpec};
use crate::error::{Error, Result};
use crate::families::{build_family, spine_vertex, FamilySpec};
use crate::graph::{Edge, Graph};
use crate::matching::maximal_matchings_of_complement;
use crate::numeric::{ratio, ratio_from_ints, ratio_string, Count, Ratio};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::time::Instant;

/// Largest order at which the exhaustive verification of the clique and
/// spanning-fraction statements is on record; above it they are open.
pub const VERIFIED_ORDER: usize = 10;

fn rs(r: &Ratio) -> String {
    ratio_string(r)
}

fn sign(o: Ordering) -> &'static str {
    match o {
        Ordering::Greater => "+",
        Ordering::Less => "-",
        Ordering::Equal => "0",
    }
}

fn mu_of(g: &Graph) -> Result<Ratio> {
    census(g)?.mu()
}

/// `μ(G) >= (n+2)/3`, with equality exactly for the path.
pub fn min_path(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let bound = ratio_from_ints(a.order() as i64 + 2, 3);
    let equality = mu == bound;
    let is_path = a.is_path()?;
    let ok = mu >= bound && equality == is_path;
    let witness = json!({ "bound": rs(&bound), "equality": equality, "is_path": is_path });
    Ok(a.verdict(CheckKind::MinPath.name(), Outcome::theorem(ok), witness, started))
}

/// `μ(G) <= μ(K_n)`, with equality exactly for the clique.
pub fn max_clique(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let bound = mu_complete(a.order() as u64)?;
    let equality = mu == bound;
    let is_complete = a.is_complete();
    let ok = mu <= bound && equality == is_complete;
    let witness = json!({ "mu_complete": rs(&bound), "equality": equality, "is_complete": is_complete });
    let outcome = Outcome::verified_up_to(ok, a.order() <= VERIFIED_ORDER);
    Ok(a.verdict(CheckKind::MaxClique.name(), outcome, witness, started))
}

/// Some non-bridge edge whose deletion lowers `μ`.
pub fn edge_deletion_exists(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let g = a.graph();
    if g.is_tree() {
        let witness = json!({ "vacuous": "tree" });
        return Ok(a.verdict(CheckKind::EdgeDeletion.name(), Outcome::report(), witness, started));
    }
    let mut checked = 0;
    for (u, v) in g.edges() {
        if g.is_bridge(u, v) {
            continue;
        }
        checked += 1;
        let after = mu_of(&g.delete_edge(u, v)?)?;
        if after < mu {
            let witness = json!({ "edge": [u, v], "mu_after": rs(&after) });
            return Ok(a.verdict(CheckKind::EdgeDeletion.name(), Outcome::conjecture(true), witness, started));
        }
    }
    let witness = json!({ "edges_checked": checked });
    Ok(a.verdict(CheckKind::EdgeDeletion.name(), Outcome::conjecture(false), witness, started))
}

/// Some non-edge whose addition raises `μ`.
pub fn edge_addition_exists(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let g = a.graph();
    if a.is_complete() {
        let witness = json!({ "vacuous": "complete" });
        return Ok(a.verdict(CheckKind::EdgeAddition.name(), Outcome::report(), witness, started));
    }
    let non_edges = g.non_edges();
    for &(u, v) in &non_edges {
        let after = mu_of(&g.add_edge(u, v)?)?;
        if after > mu {
            let witness = json!({ "edge": [u, v], "mu_after": rs(&after) });
            return Ok(a.verdict(CheckKind::EdgeAddition.name(), Outcome::conjecture(true), witness, started));
        }
    }
    let witness = json!({ "non_edges_checked": non_edges.len() });
    Ok(a.verdict(CheckKind::EdgeAddition.name(), Outcome::conjecture(false), witness, started))
}

/// Non-edges `e` grouped by the isomorphism class of `G + e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionClass {
    /// Lexicographically first non-edge of the class.
    pub representative: Edge,
    pub size: usize,
    pub mu_after: Ratio,
    /// Sign of `μ(G + e) - μ(G)`.
    pub change: Ordering,
}

pub fn classify_edge_additions(g: &Graph) -> Result<Vec<AdditionClass>> {
    let mu = mu_of(g)?;
    let mut index: HashMap<_, usize> = HashMap::new();
    let mut classes: Vec<(Edge, usize, Graph)> = Vec::new();
    for (u, v) in g.non_edges() {
        let h = g.add_edge(u, v)?;
        let cert = canonical_form(&h)?;
        match index.get(&cert) {
            Some(&i) => classes[i].1 += 1,
            None => {
                index.insert(cert, classes.len());
                classes.push(((u, v), 1, h));
            }
        }
    }
    classes
        .into_par_iter()
        .map(|(representative, size, h)| {
            let mu_after = mu_of(&h)?;
            Ok(AdditionClass {
                representative,
                size,
                change: mu_after.cmp(&mu),
                mu_after,
            })
        })
        .collect()
}

pub fn edge_addition_classes(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    let classes = classify_edge_additions(a.graph())?;
    let positive = classes.iter().filter(|c| c.change == Ordering::Greater).count();
    let detail: Vec<_> = classes
        .iter()
        .map(|c| {
            json!({
                "edge": [c.representative.0, c.representative.1],
                "size": c.size,
                "sign": sign(c.change),
                "mu_after": rs(&c.mu_after),
            })
        })
        .collect();
    let witness = json!({ "classes": classes.len(), "positive_classes": positive, "detail": detail });
    Ok(a.verdict(CheckKind::EdgeAdditionClasses.name(), Outcome::report(), witness, started))
}

/// Signs of `μ(G + M) - μ(G)` over the maximal matchings `M` of `G^c`;
/// `Holds` when all of them are negative, otherwise a report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingTally {
    pub matchings: u64,
    /// Distinct isomorphism classes among the graphs `G + M`.
    pub classes: usize,
    pub increase: u64,
    pub decrease: u64,
    pub unchanged: u64,
}

pub fn matching_tally(g: &Graph) -> Result<MatchingTally> {
    let mu = mu_of(g)?;
    let all: Vec<Vec<Edge>> = maximal_matchings_of_complement(g).collect();
    let keyed: Vec<_> = all
        .par_iter()
        .map(|m| {
            let h = g.add_edges(m)?;
            Ok((canonical_form(&h)?, h))
        })
        .collect::<Result<_>>()?;
    let mut index = HashMap::new();
    let mut reps = Vec::new();
    let mut weight = Vec::new();
    for (cert, h) in keyed {
        let i = *index.entry(cert).or_insert_with(|| {
            reps.push(h);
            weight.push(0u64);
            reps.len() - 1
        });
        weight[i] += 1;
    }
    let changes: Vec<Ordering> = reps
        .par_iter()
        .map(|h| Ok(mu_of(h)?.cmp(&mu)))
        .collect::<Result<_>>()?;
    let mut tally = MatchingTally {
        matchings: all.len() as u64,
        classes: reps.len(),
        ..MatchingTally::default()
    };
    for (c, w) in changes.into_iter().zip(weight) {
        match c {
            Ordering::Greater => tally.increase += w,
            Ordering::Less => tally.decrease += w,
            Ordering::Equal => tally.unchanged += w,
        }
    }
    Ok(tally)
}

/// Whether adding any maximal matching of the complement raises `μ`.
pub fn matchings(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    let t = matching_tally(a.graph())?;
    let witness = json!({
        "matchings": t.matchings,
        "classes": t.classes,
        "increase": t.increase,
        "decrease": t.decrease,
        "unchanged": t.unchanged,
    });
    // Holds when every maximal matching lowers the mean, as on D(14,6).
    let outcome = if t.matchings > 0 && t.decrease == t.matchings {
        Outcome::conjecture(true)
    } else {
        Outcome::report()
    };
    Ok(a.verdict(CheckKind::Matchings.name(), outcome, witness, started))
}

/// `μ(G) - μ(G/e) >= 1/3` for every edge, with equality exactly on paths.
/// Contraction merges parallel edges and drops loops.
pub fn contraction(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let g = a.graph();
    if a.order() < 2 {
        let witness = json!({ "vacuous": "single vertex" });
        return Ok(a.verdict(CheckKind::Contraction.name(), Outcome::report(), witness, started));
    }
    let third = ratio_from_ints(1, 3);
    let mut min: Option<(Ratio, Edge)> = None;
    let mut equality_edges = Vec::new();
    for (u, v) in g.edges() {
        let gap = &mu - mu_of(&g.contract_edge(u, v)?)?;
        if gap == third {
            equality_edges.push([u, v]);
        }
        if min.as_ref().is_none_or(|(m, _)| gap < *m) {
            min = Some((gap, (u, v)));
        }
    }
    let (min_gap, edge) = min.expect("connected graph with n >= 2 has an edge");
    let is_tree = g.is_tree();
    let is_path = a.is_path()?;
    let ok = min_gap >= third && (!is_tree || !equality_edges.is_empty() == is_path);
    let witness = json!({
        "min_gap": rs(&min_gap),
        "edge": [edge.0, edge.1],
        "equality_edges": equality_edges,
        "is_tree": is_tree,
        "is_path": is_path,
        "contraction": "simple",
    });
    let outcome = if is_tree { Outcome::theorem(ok) } else { Outcome::conjecture(ok) };
    Ok(a.verdict(CheckKind::Contraction.name(), outcome, witness, started))
}

/// Global and local means of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMeans {
    pub mu: Ratio,
    pub vertex: Vec<Ratio>,
    pub edge: Vec<(Edge, Ratio)>,
}

pub fn local_means(g: &Graph) -> Result<LocalMeans> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let c = census(g)?;
    let vertex = (0..g.order()).map(|v| c.mu_at_vertex(v)).collect::<Result<_>>()?;
    let edge = edge_census(g)?
        .into_iter()
        .map(|(e, n, r)| (e, ratio(&r, &n)))
        .collect();
    Ok(LocalMeans { mu: c.mu()?, vertex, edge })
}

/// Some vertex and some edge have local mean above the global mean; also
/// lists the vertices and vertex-edge pairs where the local mean does not
/// increase.
pub fn local_global(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    if a.order() < 2 {
        let witness = json!({ "vacuous": "single vertex" });
        return Ok(a.verdict(CheckKind::LocalGlobal.name(), Outcome::report(), witness, started));
    }
    let m = local_means(a.graph())?;
    let low_vertices: Vec<usize> = (0..a.order()).filter(|&v| m.vertex[v] <= m.mu).collect();
    let mut low_edges = Vec::new();
    for (v, mu_v) in m.vertex.iter().enumerate() {
        for ((x, y), mu_e) in &m.edge {
            if (*x == v || *y == v) && mu_e <= mu_v {
                low_edges.push(json!([v, [x, y]]));
            }
        }
    }
    let vertex_above = m.vertex.iter().any(|x| *x > m.mu);
    let edge_above = m.edge.iter().any(|(_, x)| *x > m.mu);
    let witness = json!({
        "vertex_above": vertex_above,
        "edge_above": edge_above,
        "vertices_not_above": low_vertices,
        "edges_not_above_vertex": low_edges,
    });
    Ok(a.verdict(CheckKind::LocalGlobal.name(), Outcome::theorem(vertex_above && edge_above), witness, started))
}

/// All subtrees of order at most 3: single vertices, edges and two-edge paths.
pub fn small_subtrees(g: &Graph) -> Vec<RootConstraint> {
    let mut out: Vec<RootConstraint> = g.vertices().iter().map(RootConstraint::vertex).collect();
    out.extend(g.edges().into_iter().map(|(u, v)| RootConstraint::edge(u, v)));
    for centre in 0..g.order() {
        let nb: Vec<usize> = g.neighbors(centre).iter().collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                out.push(RootConstraint::tree(&[(x, centre), (centre, y)]).expect("path is a tree"));
            }
        }
    }
    out
}

/// `μ(G, T) >= (n + |T|)/2` for every subtree `T` of order at most 3.
pub fn local_bound(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    let g = a.graph();
    let n = a.order() as i64;
    let constraints = small_subtrees(g);
    let mut min_slack: Option<Ratio> = None;
    let mut first_violation = None;
    for c in &constraints {
        let (count, order) = census_containing(g, c)?;
        let local = ratio(&order, &count);
        let slack = local - ratio_from_ints(n + c.order() as i64, 2);
        if slack < Ratio::zero() && first_violation.is_none() {
            first_violation = Some(json!({ "vertices": c.vertices().iter().collect::<Vec<_>>(), "slack": rs(&slack) }));
        }
        if min_slack.as_ref().is_none_or(|m| slack < *m) {
            min_slack = Some(slack);
        }
    }
    let witness = json!({
        "constraints": constraints.len(),
        "min_slack": min_slack.as_ref().map(rs),
        "violation": first_violation,
    });
    Ok(a.verdict(CheckKind::LocalBound.name(), Outcome::theorem(first_violation.is_none()), witness, started))
}

/// Some non-cut vertex `v` has `N(G, v) >= 2N(G)/(n+1)`, with equality
/// exactly for paths.
pub fn density_bound(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    let g = a.graph();
    let n = a.order();
    if n < 3 {
        let witness = json!({ "vacuous": "order below 3" });
        return Ok(a.verdict(CheckKind::DensityBound.name(), Outcome::report(), witness, started));
    }
    let c = a.census()?;
    let (best_vertex, best) = (0..n)
        .filter(|&v| !g.is_cut_vertex(v))
        .map(|v| (v, &c.per_vertex_total[v]))
        .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(&x.0)))
        .expect("a connected graph has a non-cut vertex");
    let lhs = best * (n as u64 + 1);
    let rhs = &c.total * 2u32;
    let equality = lhs == rhs;
    let is_path = a.is_path()?;
    let ok = lhs >= rhs && equality == is_path;
    let witness = json!({
        "vertex": best_vertex,
        "n_v": best.to_string(),
        "bound": rs(&ratio(&rhs, &Count::from(n as u64 + 1))),
        "equality": equality,
        "is_path": is_path,
    });
    Ok(a.verdict(CheckKind::DensityBound.name(), Outcome::theorem(ok), witness, started))
}

/// For a vertex- and edge-transitive graph: `μ(G,e) > μ(G,v) > μ(G)` and
/// `R·μ(G,v) = N·μ(G) + (R - N)·μ(G,e)`.
pub fn transitive_inequalities(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    a.mu()?;
    if a.order() < 2 {
        let witness = json!({ "vacuous": "single vertex" });
        return Ok(a.verdict(CheckKind::Transitive.name(), Outcome::report(), witness, started));
    }
    let m = local_means(a.graph())?;
    let mu_v = m.vertex[0].clone();
    if let Some(v) = m.vertex.iter().position(|x| *x != mu_v) {
        return Err(Error::NotTransitive(format!(
            "vertex means differ at 0 and {v}: {} vs {}",
            rs(&mu_v),
            rs(&m.vertex[v])
        )));
    }
    let mu_e = m.edge[0].1.clone();
    if let Some((e, x)) = m.edge.iter().find(|(_, x)| *x != mu_e) {
        return Err(Error::NotTransitive(format!(
            "edge means differ at {:?} and {e:?}: {} vs {}",
            m.edge[0].0,
            rs(&mu_e),
            rs(x)
        )));
    }
    let c = a.census()?;
    let total = Ratio::from_integer(c.total.clone().into());
    let total_order = Ratio::from_integer(c.total_order.clone().into());
    let identity = &total_order * &mu_v == &total * &m.mu + (&total_order - &total) * &mu_e;
    let chain = mu_e > mu_v && mu_v > m.mu;
    let witness = json!({
        "mu_v": rs(&mu_v),
        "mu_e": rs(&mu_e),
        "chain": chain,
        "identity": identity,
    });
    Ok(a.verdict(CheckKind::Transitive.name(), Outcome::theorem(chain && identity), witness, started))
}

/// Subtree-count ratios against `K_n` and `S_n`:
/// (a) `s_{n-1}(G) s_n(K_n) >= s_{n-1}(K_n) s_n(G)`;
/// (b) `s_j(G) s_k(K_n) >= s_j(K_n) s_k(G)` for `j <= k`;
/// (c) `p(G) <= p(K_n)`; (d) `p(G) >= p(S_n)`, equality only for the star;
/// (e) `μ(G) <= μ(K_n)`.
pub fn ratio_chain(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let c = a.census()?;
    let n = a.order();
    let nn = n as u64;
    let sk: Vec<Count> = (1..=nn).map(|k| s_k_complete(nn, k)).collect::<Result<_>>()?;
    let s = &c.by_order;
    let (sa, sb) = if n >= 2 {
        (&s[n - 2] * &sk[n - 1], &sk[n - 2] * &s[n - 1])
    } else {
        (Count::one(), Count::one())
    };
    let ok_a = sa >= sb;
    let mut chain_pair = None;
    'outer: for k in 1..n {
        for j in 0..k {
            if &s[j] * &sk[k] < &sk[j] * &s[k] {
                chain_pair = Some([j + 1, k + 1]);
                break 'outer;
            }
        }
    }
    let ok_b = chain_pair.is_none();
    let ok_c = &s[n - 1] * n_complete(nn) <= &sk[n - 1] * &c.total;
    let n_star = if n >= 2 { star_subtree_count(nn)? } else { Count::one() };
    let lhs_d = &s[n - 1] * &n_star;
    let equality_d = lhs_d == c.total;
    let is_star = a.is_star()?;
    let ok_d = lhs_d >= c.total && equality_d == is_star;
    let mu_k = mu_complete(nn)?;
    let ok_e = mu <= mu_k;
    let verified = n <= VERIFIED_ORDER;
    let open_ok = ok_a && ok_b && ok_c && ok_e;
    let outcome = if !ok_d || (verified && !open_ok) {
        Outcome::theorem(false)
    } else {
        Outcome::conjecture(open_ok)
    };
    let witness = json!({
        "a": ok_a,
        "b": ok_b,
        "b_pair": chain_pair,
        "c": ok_c,
        "d": ok_d,
        "d_equality": equality_d,
        "is_star": is_star,
        "e": ok_e,
    });
    Ok(a.verdict(CheckKind::RatioChain.name(), outcome, witness, started))
}

/// Sign of `μ(G) - av(G)`; trees must give equality.
pub fn mu_vs_av(a: &Analysis) -> Result<CheckVerdict> {
    let started = Instant::now();
    let mu = a.mu()?;
    let av = average_connected_set_size(a.graph())?;
    let is_tree = a.graph().is_tree();
    let change = mu.cmp(&av);
    let witness = json!({ "av": rs(&av), "sign": sign(change), "is_tree": is_tree });
    let outcome = if is_tree && change != Ordering::Equal {
        Outcome::theorem(false)
    } else {
        Outcome {
            violation: change == Ordering::Less,
            ..Outcome::report()
        }
    };
    Ok(a.verdict(CheckKind::MuVsAv.name(), outcome, witness, started))
}

/// The construction showing local means need not grow with the subtree:
/// `G = DB^{⋆(d-1)}_{n,w}`, `S` the spine path of order `k` from the first
/// hub, `S'` = `S` plus the added path `P'` of length `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityInstance {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub s: RootConstraint,
    pub s_prime: RootConstraint,
}

pub fn monotonicity_instance(k: usize, d: usize, n: usize, w: usize) -> Result<MonotonicityInstance> {
    if k == 0 || d == 0 {
        return Err(Error::InvalidParameter("need k >= 1 and d >= 1 (S must be a proper subtree of S')".into()));
    }
    let spec = FamilySpec::ModifiedDoubleBroom { n, w, a: d - 1 };
    let graph = build_family(&spec)?;
    let base = n - (d - 1);
    let spine_edges = base - 2 * w + 1;
    if k > spine_edges {
        return Err(Error::InvalidParameter(format!(
            "S of order {k} does not fit the spine before the second hub (at most {spine_edges})"
        )));
    }
    let s_vertices: Vec<usize> = (0..k).map(|i| spine_vertex(w, i)).collect();
    let s_edges: Vec<Edge> = s_vertices.windows(2).map(|p| (p[0], p[1])).collect();
    let hub1 = spine_vertex(w, 0);
    let hub2 = spine_vertex(w, spine_edges);
    let mut path = vec![hub1];
    path.extend(base..n);
    path.push(hub2);
    let mut prime_edges = s_edges.clone();
    prime_edges.extend(path.windows(2).map(|p| (p[0], p[1])));
    let s = RootConstraint::new(crate::graph::VertexSet::from_vertices(s_vertices), s_edges)?;
    let s_prime = RootConstraint::tree(&prime_edges)?;
    Ok(MonotonicityInstance { spec, graph, s, s_prime })
}

pub const MONOTONICITY_CHECK: &str = "subtree-monotonicity-counterexample";

/// Holds when `μ(G, S) > μ(G, S')` on the instance for `(k, d, n, w)`.
pub fn check_subtree_monotonicity_counterexample(k: usize, d: usize, n: usize, w: usize) -> Result<CheckVerdict> {
    let started = Instant::now();
    let inst = monotonicity_instance(k, d, n, w)?;
    let (cs, rs_) = census_containing(&inst.graph, &inst.s)?;
    let (cp, rp) = census_containing(&inst.graph, &inst.s_prime)?;
    let mu_s = ratio(&rs_, &cs);
    let mu_sp = ratio(&rp, &cp);
    let reversed = mu_s > mu_sp;
    let witness = json!({
        "k": k,
        "d": d,
        "s": inst.s.vertices().iter().collect::<Vec<_>>(),
        "s_prime": inst.s_prime.vertices().iter().collect::<Vec<_>>(),
        "mu_s": rs(&mu_s),
        "mu_s_prime": rs(&mu_sp),
        "reversed": reversed,
    });
    let a = Analysis::with_id(&inst.graph, inst.spec.to_string());
    let outcome = Outcome {
        status: if reversed { super::Status::Holds } else { super::Status::ReportOnly },
        violation: false,
    };
    Ok(a.verdict(MONOTONICITY_CHECK, outcome, witness, started))
}

/// Mean changes when one edge of `K_n ∨ mK_1` is deleted, by edge type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDeletion {
    pub n: u64,
    pub m: u64,
    pub mu: Ratio,
    /// `μ(G∖e)` for an edge between two clique vertices, when one exists.
    pub mu_minus_clique_edge: Option<Ratio>,
    /// `μ(G∖e)` for an edge between the clique and the independent set.
    pub mu_minus_cross_edge: Option<Ratio>,
    /// Share of all edges whose deletion raises `μ`.
    pub increasing_fraction: Ratio,
}

pub fn join_deletion(n: u64, m: u64) -> Result<JoinDeletion> {
    let jc = join_counts(JoinSpec::new(n, m)?)?;
    let mu = jc.mu();
    let clique_edges = n * (n - 1) / 2;
    let cross_edges = n * m;
    let mu_minus_clique_edge = (clique_edges > 0).then(|| jc.mu_minus_e());
    let mu_minus_cross_edge = if cross_edges > 0 {
        let g = build_family(&FamilySpec::JoinCliqueIndependent { n: n as usize, m: m as usize })?;
        let (ce, re) = census_containing(&g, &RootConstraint::edge(0, n as usize))?;
        Some(ratio(&(&jc.r - re), &(&jc.n - ce)))
    } else {
        None
    };
    let mut increasing = 0;
    if mu_minus_clique_edge.as_ref().is_some_and(|x| *x > mu) {
        increasing += clique_edges;
    }
    if mu_minus_cross_edge.as_ref().is_some_and(|x| *x > mu) {
        increasing += cross_edges;
    }
    let total = (clique_edges + cross_edges).max(1);
    Ok(JoinDeletion {
        n,
        m,
        mu,
        mu_minus_clique_edge,
        mu_minus_cross_edge,
        increasing_fraction: ratio(&Count::from(increasing), &Count::from(total)),
    })
}

pub fn check_min_path(g: &Graph) -> Result<CheckVerdict> {
    min_path(&Analysis::new(g)?)
}

pub fn check_max_clique(g: &Graph) -> Result<CheckVerdict> {
    max_clique(&Analysis::new(g)?)
}

pub fn check_edge_deletion_exists(g: &Graph) -> Result<CheckVerdict> {
    edge_deletion_exists(&Analysis::new(g)?)
}

pub fn check_edge_addition_exists(g: &Graph) -> Result<CheckVerdict> {
    edge_addition_exists(&Analysis::new(g)?)
}

pub fn check_matchings(g: &Graph) -> Result<CheckVerdict> {
    matchings(&Analysis::new(g)?)
}

pub fn check_contraction(g: &Graph) -> Result<CheckVerdict> {
    contraction(&Analysis::new(g)?)
}

pub fn check_local_global(g: &Graph) -> Result<CheckVerdict> {
    local_global(&Analysis::new(g)?)
}

pub fn check_local_bound(g: &Graph) -> Result<CheckVerdict> {
    local_bound(&Analysis::new(g)?)
}

pub fn check_density_bound(g: &Graph) -> Result<CheckVerdict> {
    density_bound(&Analysis::new(g)?)
}

pub fn check_transitive_inequalities(g: &Graph) -> Result<CheckVerdict> {
    transitive_inequalities(&Analysis::new(g)?)
}

pub fn check_ratio_chain(g: &Graph) -> Result<CheckVerdict> {
    ratio_chain(&Analysis::new(g)?)
}

pub fn check_mu_vs_av(g: &Graph) -> Result<CheckVerdict> {
    mu_vs_av(&Analysis::new(g)?)
}
