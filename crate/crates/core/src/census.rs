//! Exact subtree statistics.
//!
//! A subtree with vertex set `A` is a spanning tree of `G[A]`, so every
//! statistic is a sum of `κ(G[A])` over the connected vertex sets `A`. The
//! sets are enumerated once each by the extend-or-forbid recursion: rooted at
//! their minimum vertex, a set grows by a candidate neighbour and that
//! candidate is forbidden in the sibling branches that follow.

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph, VertexSet};
use crate::matrix_tree::Workspace;
use crate::numeric::{ratio, Accumulator, Count, Ratio};
use num_traits::Zero;
use rayon::prelude::*;

/// Orders at or above this split the enumeration across root vertices.
const PARALLEL_ORDER: usize = 16;

/// Calls `f` on every connected vertex set whose minimum vertex is `root`.
pub(crate) fn for_each_connected_set_rooted<F: FnMut(VertexSet)>(adj: &[u64], root: usize, f: &mut F) {
    let below = (1u64 << root) - 1;
    let set = 1u64 << root;
    extend(adj, set, adj[root] & !below & !set, below, f);
}

/// Calls `f` on every non-empty connected vertex set of the graph.
pub fn for_each_connected_set<F: FnMut(VertexSet)>(g: &Graph, mut f: F) {
    let adj = g.adjacency();
    for root in 0..g.order() {
        for_each_connected_set_rooted(adj, root, &mut f);
    }
}

fn extend<F: FnMut(VertexSet)>(adj: &[u64], set: u64, cand: u64, mut forbidden: u64, f: &mut F) {
    f(VertexSet(set));
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let bit = 1u64 << v;
        rest &= !bit;
        let grown = set | bit;
        let next = (rest | adj[v]) & !grown & !forbidden;
        extend(adj, grown, next, forbidden, f);
        forbidden |= bit;
    }
}

/// Subtree counts by order with per-vertex inclusion counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeCensus {
    /// `by_order[k - 1]` is `s_k`, the number of subtrees on `k` vertices.
    pub by_order: Vec<Count>,
    /// `N`, the number of subtrees.
    pub total: Count,
    /// `R`, the sum of subtree orders.
    pub total_order: Count,
    /// `N(G, v)` per vertex.
    pub per_vertex_total: Vec<Count>,
    /// `R(G, v)` per vertex.
    pub per_vertex_order: Vec<Count>,
}

impl SubtreeCensus {
    /// Assembles a census from counts by order and per-vertex counts.
    pub fn from_parts(by_order: Vec<Count>, per_vertex_total: Vec<Count>, per_vertex_order: Vec<Count>) -> Self {
        let total = by_order.iter().sum();
        let total_order = by_order
            .iter()
            .enumerate()
            .map(|(i, s)| s * (i as u64 + 1))
            .sum();
        SubtreeCensus {
            by_order,
            total,
            total_order,
            per_vertex_total,
            per_vertex_order,
        }
    }

    pub fn order(&self) -> usize {
        self.by_order.len()
    }

    /// `s_k` for `1 <= k <= n`.
    pub fn s(&self, k: usize) -> &Count {
        &self.by_order[k - 1]
    }

    /// `s_n`, the spanning-tree count.
    pub fn spanning(&self) -> &Count {
        self.by_order.last().expect("order >= 1")
    }

    pub fn mu(&self) -> Result<Ratio> {
        if self.spanning().is_zero() {
            return Err(Error::Disconnected);
        }
        Ok(ratio(&self.total_order, &self.total))
    }

    pub fn mu_at_vertex(&self, v: usize) -> Result<Ratio> {
        if self.spanning().is_zero() {
            return Err(Error::Disconnected);
        }
        Ok(ratio(&self.per_vertex_order[v], &self.per_vertex_total[v]))
    }

    pub fn spanning_fraction(&self) -> Result<Ratio> {
        if self.spanning().is_zero() {
            return Err(Error::Disconnected);
        }
        Ok(ratio(self.spanning(), &self.total))
    }
}

struct Partial {
    by_order: Vec<Accumulator>,
    per_total: Vec<Accumulator>,
    per_order: Vec<Accumulator>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            by_order: vec![Accumulator::default(); n],
            per_total: vec![Accumulator::default(); n],
            per_order: vec![Accumulator::default(); n],
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (a, b) in [
            (&mut self.by_order, &other.by_order),
            (&mut self.per_total, &other.per_total),
            (&mut self.per_order, &other.per_order),
        ] {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }
}

fn census_root(adj: &[u64], root: usize, partial: &mut Partial, ws: &mut Workspace) {
    for_each_connected_set_rooted(adj, root, &mut |set| {
        let kappa = ws.induced(adj, set);
        let k = set.len();
        kappa.add_scaled_to(1, &mut partial.by_order[k - 1]);
        for v in set.iter() {
            kappa.add_scaled_to(1, &mut partial.per_total[v]);
            kappa.add_scaled_to(k as u64, &mut partial.per_order[v]);
        }
    });
}

/// The full subtree census of a simple graph (connected or not).
pub fn census(g: &Graph) -> Result<SubtreeCensus> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let n = g.order();
    let adj = g.adjacency();
    let partial = if n >= PARALLEL_ORDER {
        (0..n)
            .into_par_iter()
            .map(|root| {
                let mut p = Partial::new(n);
                census_root(adj, root, &mut p, &mut Workspace::default());
                p
            })
            .reduce(|| Partial::new(n), Partial::merge)
    } else {
        let mut p = Partial::new(n);
        let mut ws = Workspace::default();
        for root in 0..n {
            census_root(adj, root, &mut p, &mut ws);
        }
        p
    };
    let values = |v: &[Accumulator]| v.iter().map(Accumulator::value).collect::<Vec<_>>();
    Ok(SubtreeCensus::from_parts(
        values(&partial.by_order),
        values(&partial.per_total),
        values(&partial.per_order),
    ))
}

/// Vertices and a forest of edges that every counted subtree must contain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootConstraint {
    vertices: VertexSet,
    edges: Vec<Edge>,
}

impl RootConstraint {
    /// No restriction: reproduces `(N, R)`.
    pub fn none() -> Self {
        RootConstraint::default()
    }

    pub fn vertex(v: usize) -> Self {
        RootConstraint {
            vertices: VertexSet::singleton(v),
            edges: Vec::new(),
        }
    }

    pub fn edge(u: usize, v: usize) -> Self {
        RootConstraint {
            vertices: VertexSet::from_vertices([u, v]),
            edges: vec![normalize(u, v)],
        }
    }

    /// The subtree spanned by `edges` (whose endpoints become required).
    pub fn tree(edges: &[Edge]) -> Result<Self> {
        let vertices = VertexSet::from_vertices(edges.iter().flat_map(|&(a, b)| [a, b]));
        RootConstraint::new(vertices, edges.to_vec())
    }

    /// Explicit vertices plus a forest over them.
    pub fn new(vertices: VertexSet, edges: Vec<Edge>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().map(|(a, b)| normalize(a, b)).collect();
        let mut parent: Vec<usize> = (0..64).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == b || b >= 64 {
                return Err(Error::InvalidConstraint(format!("bad edge {a}-{b}")));
            }
            if edges[..i].contains(&(a, b)) {
                return Err(Error::InvalidConstraint(format!("edge {a}-{b} repeated")));
            }
            if !vertices.contains(a) || !vertices.contains(b) {
                return Err(Error::InvalidConstraint(format!(
                    "edge {a}-{b} leaves the required vertices"
                )));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidConstraint("required edges contain a cycle".into()));
            }
            parent[ra] = rb;
        }
        Ok(RootConstraint { vertices, edges })
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of required vertices, `|T|` for a tree constraint.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Whether the constraint is itself a (non-empty) tree.
    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty() && self.edges.len() + 1 == self.vertices.len()
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(v) = self.vertices.iter().find(|&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
            return Err(Error::NotAnEdge(a, b));
        }
        Ok(())
    }
}

/// `(N_c, R_c)`: the number and total order of subtrees containing every
/// required vertex and edge.
pub fn census_containing(g: &Graph, c: &RootConstraint) -> Result<(Count, Count)> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    c.validate(g)?;
    let adj = g.adjacency();
    let required = c.vertices();
    let max_root = required.iter().next().unwrap_or(g.order() - 1);
    let run = |root: usize| {
        let mut count = Accumulator::default();
        let mut order = Accumulator::default();
        let mut ws = Workspace::default();
        for_each_connected_set_rooted(adj, root, &mut |set| {
            if !required.is_subset(set) {
                return;
            }
            let kappa = ws.induced_containing(adj, set, c.edges());
            kappa.add_scaled_to(1, &mut count);
            kappa.add_scaled_to(set.len() as u64, &mut order);
        });
        (count, order)
    };
    let merge = |mut a: (Accumulator, Accumulator), b: (Accumulator, Accumulator)| {
        a.0 += &b.0;
        a.1 += &b.1;
        a
    };
    let (count, order) = if g.order() >= PARALLEL_ORDER {
        (0..=max_root)
            .into_par_iter()
            .map(run)
            .reduce(|| (Accumulator::default(), Accumulator::default()), merge)
    } else {
        (0..=max_root).map(run).fold((Accumulator::default(), Accumulator::default()), merge)
    };
    Ok((count.value(), order.value()))
}

/// `(e, N(G, e), R(G, e))` for every edge, from a single enumeration pass.
pub fn edge_census(g: &Graph) -> Result<Vec<(Edge, Count, Count)>> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let edges = g.edges();
    let adj = g.adjacency();
    let mut counts = vec![(Accumulator::default(), Accumulator::default()); edges.len()];
    let mut ws = Workspace::default();
    for_each_connected_set(g, |set| {
        let k = set.len() as u64;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if set.contains(a) && set.contains(b) {
                let kappa = ws.induced_containing(adj, set, &[(a, b)]);
                kappa.add_scaled_to(1, &mut counts[i].0);
                kappa.add_scaled_to(k, &mut counts[i].1);
            }
        }
    });
    Ok(edges
        .into_iter()
        .zip(counts)
        .map(|(e, (c, o))| (e, c.value(), o.value()))
        .collect())
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn constrained_mean(g: &Graph, c: &RootConstraint) -> Result<Ratio> {
    require_connected(g)?;
    let (count, order) = census_containing(g, c)?;
    if count.is_zero() {
        return Err(Error::EmptyFamily);
    }
    Ok(ratio(&order, &count))
}

/// Mean subtree order `μ(G) = R(G) / N(G)`.
pub fn mu(g: &Graph) -> Result<Ratio> {
    require_connected(g)?;
    census(g)?.mu()
}

/// `μ(G, v)`.
pub fn mu_at_vertex(g: &Graph, v: usize) -> Result<Ratio> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    constrained_mean(g, &RootConstraint::vertex(v))
}

/// `μ(G, e)`.
pub fn mu_at_edge(g: &Graph, e: Edge) -> Result<Ratio> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0.min(e.1), e.0.max(e.1)));
    }
    constrained_mean(g, &RootConstraint::edge(e.0, e.1))
}

/// `μ(G, T)` for a constraint tree `T`.
pub fn mu_at_tree(g: &Graph, c: &RootConstraint) -> Result<Ratio> {
    if !c.is_tree() {
        return Err(Error::InvalidConstraint("constraint is not a tree".into()));
    }
    constrained_mean(g, c)
}

/// `p(G) = s_n(G) / N(G)`.
pub fn spanning_fraction(g: &Graph) -> Result<Ratio> {
    require_connected(g)?;
    census(g)?.spanning_fraction()
}

/// Number of non-empty connected vertex sets and the sum of their sizes.
pub fn connected_set_totals(g: &Graph) -> (Count, Count) {
    let mut count = 0u128;
    let mut size = 0u128;
    for_each_connected_set(g, |set| {
        count += 1;
        size += set.len() as u128;
    });
    (Count::from(count), Count::from(size))
}

/// `av(G)`: mean size of a non-empty connected vertex set.
pub fn average_connected_set_size(g: &Graph) -> Result<Ratio> {
    require_connected(g)?;
    let (count, size) = connected_set_totals(g);
    Ok(ratio(&size, &count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};
    use crate::numeric::ratio_from_ints;

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn counts(v: &[u64]) -> Vec<Count> {
        v.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn each_connected_set_once() {
        // brute force: filter all 2^n subsets for connectivity
        let g = fam(FamilySpec::Barbell { n: 9, w: 3 });
        let mut seen = Vec::new();
        for_each_connected_set(&g, |s| seen.push(s.0));
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), seen.len());
        let brute: Vec<u64> = (1u64..1 << 9)
            .filter(|&m| g.induces_connected(VertexSet(m)))
            .collect();
        assert_eq!(sorted, brute);
    }

    #[test]
    fn path3_census() {
        let c = census(&fam(FamilySpec::Path { n: 3 })).unwrap();
        assert_eq!(c.by_order, counts(&[3, 2, 1]));
        assert_eq!(c.total, Count::from(6u32));
        assert_eq!(c.total_order, Count::from(10u32));
        assert_eq!(c.mu().unwrap(), ratio_from_ints(5, 3));
        assert_eq!(c.per_vertex_total, counts(&[3, 4, 3]));
    }

    #[test]
    fn k3_and_k4_census() {
        let c = census(&fam(FamilySpec::Clique { n: 3 })).unwrap();
        assert_eq!(c.by_order, counts(&[3, 3, 3]));
        assert_eq!(c.mu().unwrap(), ratio_from_ints(2, 1));
        assert_eq!(c.spanning_fraction().unwrap(), ratio_from_ints(1, 3));
        let c = census(&fam(FamilySpec::Clique { n: 4 })).unwrap();
        assert_eq!(c.by_order, counts(&[4, 6, 12, 16]));
        assert_eq!(c.total, Count::from(38u32));
        assert_eq!(c.total_order, Count::from(116u32));
        assert_eq!(c.mu().unwrap(), ratio_from_ints(58, 19));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        let c = census(&g).unwrap();
        assert_eq!(c.by_order, counts(&[1]));
        assert_eq!(mu(&g).unwrap(), ratio_from_ints(1, 1));
        let (n, r) = census_containing(&g, &RootConstraint::none()).unwrap();
        assert_eq!((n, r), (Count::from(1u32), Count::from(1u32)));
    }

    #[test]
    fn local_counts() {
        let p3 = fam(FamilySpec::Path { n: 3 });
        let (n, r) = census_containing(&p3, &RootConstraint::vertex(1)).unwrap();
        assert_eq!((n, r), (Count::from(4u32), Count::from(8u32)));
        assert_eq!(mu_at_vertex(&p3, 1).unwrap(), ratio_from_ints(2, 1));
        let k3 = fam(FamilySpec::Clique { n: 3 });
        let (n, r) = census_containing(&k3, &RootConstraint::edge(0, 1)).unwrap();
        assert_eq!(n, Count::from(3u32));
        assert_eq!(r, Count::from(8u32));
        assert_eq!(mu_at_edge(&k3, (0, 1)).unwrap(), ratio_from_ints(8, 3));
        let tree = fam(FamilySpec::DoubleBroom { n: 8, w: 3 });
        let whole = RootConstraint::tree(&tree.edges()).unwrap();
        let (n, r) = census_containing(&tree, &whole).unwrap();
        assert_eq!((n, r), (Count::from(1u32), Count::from(8u32)));
    }

    #[test]
    fn empty_constraint_reproduces_totals() {
        let g = fam(FamilySpec::Petersen);
        let c = census(&g).unwrap();
        let (n, r) = census_containing(&g, &RootConstraint::none()).unwrap();
        assert_eq!((n, r), (c.total, c.total_order));
    }

    #[test]
    fn constraint_errors() {
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert!(matches!(
            census_containing(&p3, &RootConstraint::edge(0, 2)),
            Err(Error::NotAnEdge(0, 2))
        ));
        assert!(RootConstraint::tree(&[(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(RootConstraint::new(VertexSet::singleton(0), vec![(0, 1)]).is_err());
        assert!(mu_at_edge(&p3, (0, 2)).is_err());
        let disc = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(mu(&disc), Err(Error::Disconnected)));
        assert!(matches!(spanning_fraction(&disc), Err(Error::Disconnected)));
        assert!(matches!(average_connected_set_size(&disc), Err(Error::Disconnected)));
    }

    #[test]
    fn average_connected_set_sizes() {
        assert_eq!(
            average_connected_set_size(&fam(FamilySpec::Clique { n: 2 })).unwrap(),
            ratio_from_ints(4, 3)
        );
        assert_eq!(
            average_connected_set_size(&fam(FamilySpec::Clique { n: 4 })).unwrap(),
            ratio_from_ints(4 + 6 * 2 + 4 * 3 + 4, 15)
        );
    }

    #[test]
    fn parallel_split_matches_serial() {
        let g = fam(FamilySpec::ModifiedBarbell { n: 16, w: 5, a: 1 });
        let par = census(&g).unwrap();
        let adj = g.adjacency();
        let mut p = Partial::new(16);
        let mut ws = Workspace::default();
        for root in 0..16 {
            census_root(adj, root, &mut p, &mut ws);
        }
        let serial: Vec<Count> = p.by_order.iter().map(Accumulator::value).collect();
        assert_eq!(par.by_order, serial);
    }

    #[test]
    fn edge_census_matches_single_constraints() {
        let g = fam(FamilySpec::Barbell { n: 8, w: 3 });
        for (e, n, r) in edge_census(&g).unwrap() {
            let (n2, r2) = census_containing(&g, &RootConstraint::edge(e.0, e.1)).unwrap();
            assert_eq!((n, r), (n2, r2), "edge {e:?}");
        }
    }
}
