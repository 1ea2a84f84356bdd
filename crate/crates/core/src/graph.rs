//! Labeled graphs on at most 64 vertices.
//!
//! The simple support of a graph is kept as one adjacency word per vertex so
//! that vertex sets are plain `u64` masks. Edge multiplicities are stored
//! alongside; they only exceed one in contracted multigraphs built for
//! spanning-tree counting.

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// An undirected edge, normalized so that `0 < 1`.
pub type Edge = (usize, usize);

pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of vertex indices packed into one machine word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |m, v| m | 1u64 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    /// Row-major `n * n` multiplicities; zero diagonal, symmetric.
    mult: Vec<u32>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            mult: vec![0; n * n],
        })
    }

    /// A simple graph from an edge list. Repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            g.set_multiplicity(u, v, 1);
        }
        Ok(g)
    }

    /// A multigraph from `(u, v, multiplicity)` triples.
    pub fn from_multiplicities(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v, m) in edges {
            g.check_pair(u, v)?;
            let cur = g.multiplicity(u, v);
            g.set_multiplicity(u, v, cur + m);
        }
        Ok(g)
    }

    /// Builds from raw adjacency masks of a simple graph.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        let mut mult = vec![0; n * n];
        for (u, &row) in adj.iter().enumerate() {
            for v in VertexSet(row).iter() {
                mult[u * n + v] = 1;
            }
        }
        Graph { n, adj, mult }
    }

    pub(crate) fn set_multiplicity(&mut self, u: usize, v: usize, m: u32) {
        let n = self.n;
        self.mult[u * n + v] = m;
        self.mult[v * n + u] = m;
        if m > 0 {
            self.adj[u] |= 1u64 << v;
            self.adj[v] |= 1u64 << u;
        } else {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighbourhood of `v` in the simple support.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges of the simple support in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `G + uv`; fails on loops and existing edges.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_multiplicity(u, v, 1);
        Ok(g)
    }

    /// `G + M` for a set of new edges.
    pub fn add_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// `G \ uv`; the edge must be present with multiplicity one.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.multiplicity(u, v) != 1 {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_multiplicity(u, v, 0);
        Ok(g)
    }

    /// `G / uv` as a simple graph: the endpoints merge into the lower index,
    /// parallel edges collapse to one and the loop disappears. Vertices above
    /// the higher endpoint shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        if self.n < 2 {
            return Err(Error::VertexCount(self.n - 1));
        }
        let (keep, gone) = normalize(u, v);
        let relabel = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::empty(self.n - 1)?;
        for (a, b) in self.edges() {
            let (x, y) = (relabel(a), relabel(b));
            if x != y {
                g.set_multiplicity(x, y, 1);
            }
        }
        Ok(g)
    }

    /// `G - v`, relabeling vertices above `v` down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = Graph::empty(self.n - 1)?;
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        for a in 0..self.n {
            for b in a + 1..self.n {
                let m = self.multiplicity(a, b);
                if m > 0 && a != v && b != v {
                    g.set_multiplicity(relabel(a), relabel(b), m);
                }
            }
        }
        Ok(g)
    }

    /// The induced subgraph on `set`, relabeled to `0..|set|` in index order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        let verts: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                let m = self.multiplicity(a, b);
                if m > 0 {
                    g.set_multiplicity(i, j, m);
                }
            }
        }
        Ok(g)
    }

    /// Complement of the simple support.
    pub fn complement(&self) -> Result<Graph> {
        if !self.is_simple() {
            return Err(Error::Multigraph);
        }
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for a in 0..self.n {
            for b in a + 1..self.n {
                let m = self.multiplicity(a, b);
                if m > 0 {
                    g.set_multiplicity(perm[a], perm[b], m);
                }
            }
        }
        g
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertices()) == self.vertices()
    }

    pub fn induces_connected(&self, set: VertexSet) -> bool {
        match set.iter().next() {
            None => false,
            Some(s) => self.component_within(s, set) == set,
        }
    }

    /// Whether removing `v` disconnects the rest of its component.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let comp = self.component_within(v, self.vertices());
        let rest = VertexSet(comp.0 & !(1u64 << v));
        match rest.iter().next() {
            None => false,
            Some(s) => self.component_within(s, rest) != rest,
        }
    }

    /// Whether `uv` is an edge whose removal disconnects its component.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let mut g = self.clone();
        g.set_multiplicity(u, v, 0);
        !g.component_within(u, g.vertices()).contains(v)
    }

    pub fn is_tree(&self) -> bool {
        self.is_simple() && self.edge_count() + 1 == self.n && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
