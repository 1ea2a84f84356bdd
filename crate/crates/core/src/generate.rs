//! Isomorphism-class generation by vertex augmentation.

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

pub const CONNECTED_MAX_ORDER: usize = 8;
pub const TREE_MAX_ORDER: usize = 16;

/// One connected graph per isomorphism class of order `n`, for `1 <= n <= 8`.
/// Each is in canonical labeling; the order is deterministic.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > CONNECTED_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "built-in generation order",
            n,
            limit: CONNECTED_MAX_ORDER,
        });
    }
    // every connected graph has a non-cut vertex, so joining a new vertex to
    // a non-empty subset of a smaller connected graph reaches all classes
    augment(n, |g| {
        let k = g.order();
        (1u64..1 << k).map(|mask| (0..k).filter(|&v| mask >> v & 1 == 1).collect()).collect()
    })
}

/// One tree per isomorphism class of order `n`, for `1 <= n <= 16`.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > TREE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "tree generation order",
            n,
            limit: TREE_MAX_ORDER,
        });
    }
    augment(n, |g| (0..g.order()).map(|v| vec![v]).collect())
}

fn augment<F>(n: usize, attachments: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> Vec<Vec<usize>>,
{
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for attach in attachments(g) {
                let mut adj: Vec<_> = g.edges();
                adj.extend(attach.iter().map(|&v| (v, k - 1)));
                let h = Graph::from_edges(k, &adj)?;
                if seen.insert(canonical_form(&h)?) {
                    next.push(canonical_graph(&h)?);
                }
            }
        }
        level = next;
    }
    Ok(level)
}
