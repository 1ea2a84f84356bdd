//! Direct subtree enumeration, used to cross-check the determinant census.
//!
//! Each subtree is grown from its minimum vertex: the first frontier edge is
//! either taken or discarded for good, so every subtree is produced once.

use crate::census::SubtreeCensus;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::numeric::Count;

pub const ORACLE_MAX_ORDER: usize = 8;

struct Tally {
    by_order: Vec<u64>,
    per_total: Vec<u64>,
    per_order: Vec<u64>,
}

fn grow(g: &Graph, root: usize, tree: u64, frontier: &[Edge], tally: &mut Tally) {
    let open: Vec<Edge> = frontier
        .iter()
        .copied()
        .filter(|&(_, w)| tree >> w & 1 == 0)
        .collect();
    let Some((&(_, w), rest)) = open.split_first() else {
        let k = tree.count_ones() as usize;
        tally.by_order[k - 1] += 1;
        for v in 0..g.order() {
            if tree >> v & 1 == 1 {
                tally.per_total[v] += 1;
                tally.per_order[v] += k as u64;
            }
        }
        return;
    };
    grow(g, root, tree, rest, tally);
    let grown = tree | 1 << w;
    let mut next = rest.to_vec();
    next.extend(
        g.neighbors(w)
            .iter()
            .filter(|&y| y > root && grown >> y & 1 == 0)
            .map(|y| (w, y)),
    );
    grow(g, root, grown, &next, tally);
}

/// Census by explicit enumeration of subtrees, for `n <= 8`.
pub fn oracle_enumerate_subtrees(g: &Graph) -> Result<SubtreeCensus> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "oracle order",
            n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let mut tally = Tally {
        by_order: vec![0; n],
        per_total: vec![0; n],
        per_order: vec![0; n],
    };
    for root in 0..n {
        let frontier: Vec<Edge> = g.neighbors(root).iter().filter(|&y| y > root).map(|y| (root, y)).collect();
        grow(g, root, 1 << root, &frontier, &mut tally);
    }
    let counts = |v: Vec<u64>| v.into_iter().map(Count::from).collect();
    Ok(SubtreeCensus::from_parts(
        counts(tally.by_order),
        counts(tally.per_total),
        counts(tally.per_order),
    ))
}
