use num_bigint::BigUint;
use proptest::prelude::*;
use subtree_core::canon::{are_isomorphic, canonical_form};
use subtree_core::census::{census, census_containing, edge_census, RootConstraint};
use subtree_core::generate::generate_connected;
use subtree_core::numeric::ratio_from_ints;
use subtree_core::oracle::oracle_enumerate_subtrees;
use subtree_core::{build_family, FamilySpec, Graph};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn dense_graph(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
}

#[test]
fn oracle_agrees_on_all_connected_graphs_up_to_six() {
    for n in 1..=6 {
        for g in generate_connected(n).unwrap() {
            assert_eq!(census(&g).unwrap(), oracle_enumerate_subtrees(&g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracle_agrees_at_order_seven(g in dense_graph(7)) {
        prop_assert_eq!(census(&g).unwrap(), oracle_enumerate_subtrees(&g).unwrap());
    }

    #[test]
    fn oracle_agrees_at_order_eight(g in dense_graph(8)) {
        prop_assert_eq!(census(&g).unwrap(), oracle_enumerate_subtrees(&g).unwrap());
    }
}

proptest! {
    #[test]
    fn vertex_handshake(g in any_graph(9)) {
        let c = census(&g).unwrap();
        let sum: BigUint = c.per_vertex_total.iter().sum();
        prop_assert_eq!(sum, c.total_order.clone());
        let by_order: BigUint = c.by_order.iter().sum();
        prop_assert_eq!(by_order, c.total.clone());
    }

    #[test]
    fn edge_handshake(g in any_graph(8)) {
        let c = census(&g).unwrap();
        let sum: BigUint = edge_census(&g).unwrap().into_iter().map(|(_, n, _)| n).sum();
        prop_assert_eq!(sum + &c.total, c.total_order);
    }

    #[test]
    fn vertex_deletion_identities(g in any_graph(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() >= 2);
        let v = pick.index(g.order());
        let c = census(&g).unwrap();
        let rest = census(&g.delete_vertex(v).unwrap()).unwrap();
        prop_assert_eq!(&c.per_vertex_total[v] + &rest.total, c.total.clone());
        prop_assert_eq!(&c.per_vertex_order[v] + &rest.total_order, c.total_order.clone());
        let (nv, rv) = census_containing(&g, &RootConstraint::vertex(v)).unwrap();
        prop_assert_eq!(nv, c.per_vertex_total[v].clone());
        prop_assert_eq!(rv, c.per_vertex_order[v].clone());
    }

    #[test]
    fn stronger_constraints_count_fewer(g in any_graph(8), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let (nu, _) = census_containing(&g, &RootConstraint::vertex(u)).unwrap();
        let (ne, _) = census_containing(&g, &RootConstraint::edge(u, v)).unwrap();
        prop_assert!(ne <= nu);
        prop_assert!(ne >= BigUint::from(1u32));
        if let Some(&w) = g.neighbors(v).iter().collect::<Vec<_>>().iter().find(|&&w| w != u) {
            let (np, _) = census_containing(&g, &RootConstraint::tree(&[(u, v), (v, w)]).unwrap()).unwrap();
            prop_assert!(np <= ne);
        }
    }

    #[test]
    fn relabeling_preserves_census_and_certificate(g in any_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.permute(&perm);
        let (cg, ch) = (census(&g).unwrap(), census(&h).unwrap());
        prop_assert_eq!(&cg.by_order, &ch.by_order);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }
}

#[test]
fn contracting_a_path_edge_gives_the_shorter_path() {
    for n in 2..=16 {
        let p = build_family(&FamilySpec::Path { n }).unwrap();
        let shorter = build_family(&FamilySpec::Path { n: n - 1 }).unwrap();
        let mu = census(&p).unwrap().mu().unwrap();
        for (u, v) in p.edges() {
            let q = p.contract_edge(u, v).unwrap();
            assert!(are_isomorphic(&q, &shorter).unwrap());
            assert_eq!(&mu - census(&q).unwrap().mu().unwrap(), ratio_from_ints(1, 3));
        }
    }
}
