//! Named graph families.
//!
//! Barbells and double brooms share one layout: the `w - 1` outer vertices of
//! the first end come first, then the spine `v_0 ..= v_L` in order (so `v_i`
//! sits at index `w - 1 + i`), then the outer vertices of the second end.
//! The `⋆a` variants append their `a` new path vertices at the very end.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `P_n`.
    Path { n: usize },
    /// `S_n`: one centre and `n - 1` leaves.
    Star { n: usize },
    /// `K_n`.
    Clique { n: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `D_{n,w}`: two `K_w` joined through a path.
    Barbell { n: usize, w: usize },
    /// `D^{⋆a}_{n,w}`: `D_{n-a,w}` plus a path with `a` new vertices joining
    /// the two hubs.
    ModifiedBarbell { n: usize, w: usize, a: usize },
    /// `DB_{n,w}`: a path with `w - 1` pendant leaves at each end.
    DoubleBroom { n: usize, w: usize },
    /// `DB^{⋆a}_{n,w}`.
    ModifiedDoubleBroom { n: usize, w: usize, a: usize },
    /// `K_n ∨ mK_1`, clique vertices first.
    JoinCliqueIndependent { n: usize, m: usize },
    /// `K_{a,b}`.
    CompleteBipartite { a: usize, b: usize },
    Petersen,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::Clique { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Barbell { n, .. }
            | FamilySpec::ModifiedBarbell { n, .. }
            | FamilySpec::DoubleBroom { n, .. }
            | FamilySpec::ModifiedDoubleBroom { n, .. } => n,
            FamilySpec::JoinCliqueIndependent { n, m } => n + m,
            FamilySpec::CompleteBipartite { a, b } => a + b,
            FamilySpec::Petersen => 10,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

/// Index of spine vertex `v_i` in a barbell or double broom with end size `w`.
pub fn spine_vertex(w: usize, i: usize) -> usize {
    w - 1 + i
}

fn clique_edges(verts: &[usize], out: &mut Vec<Edge>) {
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            out.push((a, b));
        }
    }
}

/// Shared skeleton of barbells (`ends_are_cliques`) and double brooms.
fn dumbbell(n: usize, w: usize, ends_are_cliques: bool) -> Result<(Vec<Edge>, usize, usize)> {
    let name = if ends_are_cliques { "barbell" } else { "double broom" };
    if w < 2 {
        return Err(bad(format!("{name} needs w >= 2, got {w}")));
    }
    if n < 2 * w {
        return Err(bad(format!("{name} needs n >= 2w, got n={n}, w={w}")));
    }
    let last = n - 2 * w + 1;
    let hub1 = spine_vertex(w, 0);
    let hub2 = spine_vertex(w, last);
    let mut edges = Vec::new();
    for i in 0..last {
        edges.push((spine_vertex(w, i), spine_vertex(w, i + 1)));
    }
    for (hub, outer) in [(hub1, 0..w - 1), (hub2, hub2 + 1..n)] {
        if ends_are_cliques {
            let verts: Vec<usize> = outer.chain([hub]).collect();
            clique_edges(&verts, &mut edges);
        } else {
            edges.extend(outer.map(|x| (x.min(hub), x.max(hub))));
        }
    }
    Ok((edges, hub1, hub2))
}

fn starred(n: usize, w: usize, a: usize, ends_are_cliques: bool) -> Result<Graph> {
    if a > n {
        return Err(bad(format!("a={a} exceeds n={n}")));
    }
    let base = n - a;
    let (mut edges, hub1, hub2) = dumbbell(base, w, ends_are_cliques)?;
    if a == 0 && base == 2 * w {
        return Err(bad("hubs already adjacent; a = 0 would duplicate the edge"));
    }
    let mut prev = hub1;
    for x in base..n {
        edges.push((prev, x));
        prev = x;
    }
    edges.push((prev.min(hub2), prev.max(hub2)));
    Graph::from_edges(n, &edges)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path { n } => {
            let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star { n } => {
            let edges: Vec<Edge> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Clique { n } => {
            let mut edges = Vec::new();
            clique_edges(&(0..n).collect::<Vec<_>>(), &mut edges);
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(bad(format!("cycle needs n >= 3, got {n}")));
            }
            let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Barbell { n, w } => {
            let (edges, _, _) = dumbbell(n, w, true)?;
            Graph::from_edges(n, &edges)
        }
        FamilySpec::DoubleBroom { n, w } => {
            let (edges, _, _) = dumbbell(n, w, false)?;
            Graph::from_edges(n, &edges)
        }
        FamilySpec::ModifiedBarbell { n, w, a } => starred(n, w, a, true),
        FamilySpec::ModifiedDoubleBroom { n, w, a } => starred(n, w, a, false),
        FamilySpec::JoinCliqueIndependent { n, m } => {
            if n == 0 {
                return Err(bad("join needs a clique part of size >= 1"));
            }
            let mut edges = Vec::new();
            clique_edges(&(0..n).collect::<Vec<_>>(), &mut edges);
            for c in 0..n {
                edges.extend((n..n + m).map(|x| (c, x)));
            }
            Graph::from_edges(n + m, &edges)
        }
        FamilySpec::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(bad("complete bipartite parts must be non-empty"));
            }
            let edges: Vec<Edge> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
            Graph::from_edges(a + b, &edges)
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push(crate::graph::normalize(i, (i + 1) % 5));
                edges.push(crate::graph::normalize(5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            Graph::from_edges(10, &edges)
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "family:path:{n}"),
            FamilySpec::Star { n } => write!(f, "family:star:{n}"),
            FamilySpec::Clique { n } => write!(f, "family:clique:{n}"),
            FamilySpec::Cycle { n } => write!(f, "family:cycle:{n}"),
            FamilySpec::Barbell { n, w } => write!(f, "family:barbell:{n}:{w}"),
            FamilySpec::ModifiedBarbell { n, w, a } => {
                write!(f, "family:modified_barbell:{n}:{w}:{a}")
            }
            FamilySpec::DoubleBroom { n, w } => write!(f, "family:double_broom:{n}:{w}"),
            FamilySpec::ModifiedDoubleBroom { n, w, a } => {
                write!(f, "family:modified_double_broom:{n}:{w}:{a}")
            }
            FamilySpec::JoinCliqueIndependent { n, m } => write!(f, "family:join:{n}:{m}"),
            FamilySpec::CompleteBipartite { a, b } => {
                write!(f, "family:complete_bipartite:{a}:{b}")
            }
            FamilySpec::Petersen => write!(f, "family:petersen"),
        }
    }
}

/// Parses `family:<kind>:<p1>[:<p2>[:<p3>]]`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("family:")
            .ok_or_else(|| bad(format!("`{s}` does not start with `family:`")))?;
        let mut parts = rest.split(':');
        let kind = parts.next().unwrap_or_default().replace('-', "_");
        let params = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad(format!("bad parameter `{p}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(format!("`{kind}` takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match kind.as_str() {
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: params[0] }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { n: params[0] }
            }
            "clique" | "complete" => {
                arity(1)?;
                FamilySpec::Clique { n: params[0] }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: params[0] }
            }
            "barbell" => {
                arity(2)?;
                FamilySpec::Barbell { n: params[0], w: params[1] }
            }
            "modified_barbell" => {
                arity(3)?;
                FamilySpec::ModifiedBarbell { n: params[0], w: params[1], a: params[2] }
            }
            "double_broom" => {
                arity(2)?;
                FamilySpec::DoubleBroom { n: params[0], w: params[1] }
            }
            "modified_double_broom" => {
                arity(3)?;
                FamilySpec::ModifiedDoubleBroom { n: params[0], w: params[1], a: params[2] }
            }
            "join" | "join_clique_independent" => {
                arity(2)?;
                FamilySpec::JoinCliqueIndependent { n: params[0], m: params[1] }
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite { a: params[0], b: params[1] }
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            _ => {
                return Err(Error::Unknown {
                    kind: "family",
                    name: kind,
                })
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort();
        d
    }

    #[test]
    fn barbell_14_6_layout() {
        let g = build_family(&FamilySpec::Barbell { n: 14, w: 6 }).unwrap();
        assert_eq!(g.order(), 14);
        assert_eq!(g.edge_count(), 15 + 15 + 3);
        let (v0, v1, v2, v3) = (5, 6, 7, 8);
        assert_eq!(spine_vertex(6, 0), v0);
        assert!(g.has_edge(v0, v1) && g.has_edge(v1, v2) && g.has_edge(v2, v3));
        assert_eq!(g.degree(v1), 2);
        assert_eq!(g.degree(v2), 2);
        assert_eq!(g.degree(v0), 6);
        assert_eq!(g.degree(v3), 6);
        assert!(!g.is_tree());
        assert!(g.is_connected());
    }

    #[test]
    fn modified_barbell_16_5_is_k5_c8_k5() {
        let g = build_family(&FamilySpec::ModifiedBarbell { n: 16, w: 5, a: 1 }).unwrap();
        assert_eq!(g.order(), 16);
        // two K5 (10 edges each) plus the 8-cycle through both hubs
        assert_eq!(g.edge_count(), 10 + 10 + 8);
        let hub1 = spine_vertex(5, 0);
        let hub2 = spine_vertex(5, 15 - 10 + 1);
        let new = 15;
        assert!(g.has_edge(hub1, new) && g.has_edge(new, hub2));
        assert_eq!(g.degree(hub1), 6);
        // removing the two K5 interiors leaves an 8-cycle
        let cycle: Vec<usize> = (hub1..=hub2).chain([new]).collect();
        let c = g.induced(crate::graph::VertexSet::from_vertices(cycle)).unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(degrees(&c), vec![2; 8]);
        assert!(c.is_connected());
    }

    #[test]
    fn double_broom_shapes() {
        let g = build_family(&FamilySpec::DoubleBroom { n: 10, w: 3 }).unwrap();
        assert!(g.is_tree());
        assert_eq!(degrees(&g), vec![1, 1, 1, 1, 2, 2, 2, 2, 3, 3]);
        let p4 = build_family(&FamilySpec::DoubleBroom { n: 4, w: 2 }).unwrap();
        assert_eq!(p4, build_family(&FamilySpec::Path { n: 4 }).unwrap());
        let g = build_family(&FamilySpec::ModifiedDoubleBroom { n: 23, w: 8, a: 1 }).unwrap();
        assert_eq!(g.order(), 23);
        assert_eq!(g.edge_count(), 23);
        assert_eq!(g.degree(22), 2);
    }

    #[test]
    fn small_coincidences() {
        let p3 = build_family(&FamilySpec::Path { n: 3 }).unwrap();
        let s3 = build_family(&FamilySpec::Star { n: 3 }).unwrap();
        assert_eq!(degrees(&p3), degrees(&s3));
        assert!(s3.is_tree());
    }

    #[test]
    fn parameter_errors() {
        assert!(build_family(&FamilySpec::Barbell { n: 9, w: 5 }).is_err());
        assert!(build_family(&FamilySpec::Barbell { n: 10, w: 5 }).is_ok());
        assert!(build_family(&FamilySpec::Barbell { n: 10, w: 1 }).is_err());
        assert!(build_family(&FamilySpec::DoubleBroom { n: 6, w: 1 }).is_err());
        assert!(build_family(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(build_family(&FamilySpec::ModifiedBarbell { n: 10, w: 5, a: 0 }).is_err());
        assert!(build_family(&FamilySpec::Clique { n: 65 }).is_err());
    }

    #[test]
    fn family_orders() {
        for (spec, n) in [
            (FamilySpec::Barbell { n: 13, w: 4 }, 13),
            (FamilySpec::ModifiedDoubleBroom { n: 12, w: 3, a: 2 }, 12),
            (FamilySpec::JoinCliqueIndependent { n: 3, m: 4 }, 7),
            (FamilySpec::Petersen, 10),
        ] {
            assert_eq!(build_family(&spec).unwrap().order(), n);
            assert_eq!(spec.order(), n);
        }
        let pet = build_family(&FamilySpec::Petersen).unwrap();
        assert_eq!(degrees(&pet), vec![3; 10]);
        assert_eq!(pet.edge_count(), 15);
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "family:path:5",
            "family:barbell:14:6",
            "family:modified_double_broom:23:8:1",
            "family:join:2:6",
            "family:petersen",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("family:modified-barbell:16:5:1".parse::<FamilySpec>().is_ok());
        assert!("family:path".parse::<FamilySpec>().is_err());
        assert!("family:blob:3".parse::<FamilySpec>().is_err());
        assert!("path:3".parse::<FamilySpec>().is_err());
    }
}
