//! Canonical labeling by partition refinement and backtracking.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! at each level and refines to an equitable partition. Every leaf is a
//! labeling; the certificate is the lexicographically least upper-triangle
//! bitstring over all leaves. Automorphisms discovered as pairs of equivalent
//! leaves prune the tree: the search jumps back to the level where the two
//! leaves diverge, and candidates in the same orbit of the automorphisms
//! fixing the current prefix are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 32;

/// Isomorphism certificate: the order followed by the packed adjacency bits
/// of the canonically relabeled graph (row-major upper triangle, MSB first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<Certificate> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The certificate together with a canonical labeling `lab`, where `lab[i]`
/// is the original vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(Certificate, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::TooLarge {
            what: "canonical labeling",
            n,
            limit: MAX_CANON_ORDER,
        });
    }
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let mut search = Search {
        adj: g.adjacency().to_vec(),
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    let mut prefix = Vec::new();
    search.descend(root, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    Ok((Certificate(best.cert), best.lab))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, lab) = canonical_labeling(g)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permute(&perm))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[derive(Clone)]
struct Leaf {
    cert: Vec<u8>,
    lab: Vec<usize>,
    prefix: Vec<usize>,
}

struct Search {
    adj: Vec<u64>,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

impl Search {
    /// Splits cells by neighbour counts into each splitter cell until the
    /// partition is equitable. Subcells are ordered by count, which keeps the
    /// result equivariant under relabeling.
    fn refine(&self, cells: &mut Partition) {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cell
                        .iter()
                        .map(|&v| ((self.adj[v] & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let before = next.len();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                    if next.len() - before > 1 {
                        changed = true;
                    }
                }
                *cells = next;
                s += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(1 + n * n / 16);
        out.push(n as u8);
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..n {
            let row = self.adj[lab[i]];
            for &b in &lab[i + 1..] {
                acc = acc << 1 | (row >> b & 1) as u8;
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }

    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn descend(&mut self, mut cells: Partition, prefix: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells.iter().map(|c| c[0]).collect(), prefix);
        };
        let level = prefix.len();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (ci, cell) in cells.iter().enumerate() {
                if ci == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let cert = self.certificate(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                lab,
                prefix: prefix.to_vec(),
            };
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        for known in [first, best] {
            if known.cert == cert {
                let mut gamma = vec![0; self.n];
                for (pos, &v) in known.lab.iter().enumerate() {
                    gamma[v] = lab[pos];
                }
                let diverge = known
                    .prefix
                    .iter()
                    .zip(prefix)
                    .position(|(a, b)| a != b)
                    .unwrap_or(prefix.len().min(known.prefix.len()));
                self.generators.push(gamma);
                return Some(diverge);
            }
        }
        if cert < best.cert {
            self.best = Some(Leaf {
                cert,
                lab,
                prefix: prefix.to_vec(),
            });
        }
        None
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by the stored automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Brute-force certificate: minimum over all n! labelings.
    fn brute_certificate(g: &Graph) -> Vec<u8> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        permutations(n)
            .into_iter()
            .map(|lab| {
                let mut bits = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        bits.push(g.has_edge(lab[i], lab[j]) as u8);
                    }
                }
                bits
            })
            .min()
            .unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let pairs: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let mut certs = HashSet::new();
        let mut brute = HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            certs.insert(canonical_form(&g).unwrap());
            brute.insert(brute_certificate(&g));
        }
        assert_eq!(brute.len(), 11);
        assert_eq!(certs.len(), 11);
    }

    #[test]
    fn agrees_with_brute_force_partition_on_random_graphs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let graphs: Vec<Graph> = (0..300)
            .map(|_| {
                let n = rng.gen_range(1..=6);
                random_graph(n, 0.5, &mut rng)
            })
            .collect();
        for a in &graphs {
            for b in graphs.iter().take(40) {
                if a.order() != b.order() {
                    continue;
                }
                let fast = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                let slow = brute_certificate(a) == brute_certificate(b);
                assert_eq!(fast, slow, "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let mut cases: Vec<Graph> = [
            FamilySpec::Barbell { n: 14, w: 6 },
            FamilySpec::Petersen,
            FamilySpec::Clique { n: 14 },
            FamilySpec::CompleteBipartite { a: 6, b: 7 },
            FamilySpec::Cycle { n: 20 },
            FamilySpec::ModifiedDoubleBroom { n: 23, w: 8, a: 1 },
        ]
        .iter()
        .map(|s| build_family(s).unwrap())
        .collect();
        for _ in 0..30 {
            let n = rng.gen_range(5..=16);
            cases.push(random_graph(n, rng.gen_range(0.1..0.9), &mut rng));
        }
        for g in cases {
            let c = canonical_form(&g).unwrap();
            for _ in 0..5 {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permute(&perm)).unwrap(), c);
            }
            let canon = canonical_graph(&g).unwrap();
            assert_eq!(canonical_form(&canon).unwrap(), c);
        }
    }

    #[test]
    fn refuses_large_orders() {
        let g = build_family(&FamilySpec::Path { n: 33 }).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { .. })));
    }
}
