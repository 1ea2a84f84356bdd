//! Maximal matchings of the complement graph.

use crate::graph::{Edge, Graph};

/// Iterator over the maximal matchings of `g^c`, each as edges in increasing
/// lexicographic order. Matchings are visited in lexicographic order of their
/// edge index sequences.
pub struct MaximalMatchings {
    edges: Vec<Edge>,
    chosen: Vec<usize>,
    used: u64,
    next: usize,
    fresh: bool,
    done: bool,
}

pub fn maximal_matchings_of_complement(g: &Graph) -> MaximalMatchings {
    MaximalMatchings {
        edges: g.non_edges(),
        chosen: Vec::new(),
        used: 0,
        next: 0,
        fresh: true,
        done: false,
    }
}

impl MaximalMatchings {
    fn free(&self, (a, b): Edge) -> bool {
        self.used >> a & 1 == 0 && self.used >> b & 1 == 0
    }

    fn is_maximal(&self) -> bool {
        !self.edges.iter().any(|&e| self.free(e))
    }
}

impl Iterator for MaximalMatchings {
    type Item = Vec<Edge>;

    fn next(&mut self) -> Option<Vec<Edge>> {
        while !self.done {
            if self.fresh {
                self.fresh = false;
                if self.is_maximal() {
                    return Some(self.chosen.iter().map(|&i| self.edges[i]).collect());
                }
            }
            if let Some(i) = (self.next..self.edges.len()).find(|&i| self.free(self.edges[i])) {
                let (a, b) = self.edges[i];
                self.chosen.push(i);
                self.used |= 1 << a | 1 << b;
                self.next = i + 1;
                self.fresh = true;
            } else if let Some(i) = self.chosen.pop() {
                let (a, b) = self.edges[i];
                self.used &= !(1 << a | 1 << b);
                self.next = i + 1;
            } else {
                self.done = true;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};
    use std::collections::BTreeSet;

    /// Maximal matchings of the complement by filtering every edge subset.
    fn brute(g: &Graph) -> BTreeSet<Vec<Edge>> {
        let edges = g.non_edges();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << edges.len() {
            let m: Vec<Edge> = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let covered: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
            let unique: BTreeSet<_> = covered.iter().collect();
            if unique.len() != covered.len() {
                continue;
            }
            if edges.iter().all(|&(a, b)| unique.contains(&a) || unique.contains(&b)) {
                out.insert(m);
            }
        }
        out
    }

    #[test]
    fn complete_graph_has_only_the_empty_matching() {
        let k5 = build_family(&FamilySpec::Clique { n: 5 }).unwrap();
        let all: Vec<_> = maximal_matchings_of_complement(&k5).collect();
        assert_eq!(all, vec![Vec::<Edge>::new()]);
    }

    #[test]
    fn path3_complement() {
        let p3 = build_family(&FamilySpec::Path { n: 3 }).unwrap();
        let all: Vec<_> = maximal_matchings_of_complement(&p3).collect();
        assert_eq!(all, vec![vec![(0, 2)]]);
    }

    #[test]
    fn cycle5_complement_has_five() {
        let c5 = build_family(&FamilySpec::Cycle { n: 5 }).unwrap();
        let all: Vec<_> = maximal_matchings_of_complement(&c5).collect();
        assert_eq!(all.len(), 5);
        assert_eq!(all.iter().cloned().collect::<BTreeSet<_>>(), brute(&c5));
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(2..=7);
            let edges: Vec<Edge> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(0.6))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let got: Vec<_> = maximal_matchings_of_complement(&g).collect();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "duplicates");
            assert_eq!(set, brute(&g));
        }
    }
}
