//! Spanning-tree counts from Laplacian cofactors.
//!
//! Determinants use fraction-free (Bareiss) elimination. Every intermediate
//! entry is itself a minor of the input, so the native `i128` pass succeeds
//! whenever those minors and their pairwise products fit; otherwise the
//! elimination restarts over `BigInt`.

use crate::graph::{Graph, VertexSet};
use crate::numeric::{Count, Kappa};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Number of spanning trees of `g`, counting parallel edges with their
/// multiplicity. Zero for disconnected graphs, one for a single vertex.
pub fn spanning_tree_count(g: &Graph) -> Count {
    let n = g.order();
    let mut lap = vec![0i128; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let m = g.multiplicity(u, v) as i128;
                lap[u * n + v] = -m;
                lap[u * n + u] += m;
            }
        }
    }
    let mut ws = Workspace::default();
    ws.cofactor(n, &lap).into_count()
}

/// Scratch buffers reused across many small determinants.
#[derive(Default)]
pub(crate) struct Workspace {
    lap: Vec<i128>,
    work: Vec<i128>,
    class: Vec<usize>,
    members: Vec<usize>,
}

impl Workspace {
    /// Spanning trees of `G[set]` for a simple graph given by adjacency masks.
    pub fn induced(&mut self, adj: &[u64], set: VertexSet) -> Kappa {
        let k = set.len();
        if k <= 2 {
            return match k {
                0 => Kappa::Small(0),
                1 => Kappa::Small(1),
                _ => {
                    let mut it = set.iter();
                    let (a, b) = (it.next().unwrap(), it.next().unwrap());
                    Kappa::Small((adj[a] >> b & 1) as u128)
                }
            };
        }
        self.members.clear();
        self.members.extend(set.iter());
        self.lap.clear();
        self.lap.resize(k * k, 0);
        for i in 0..k {
            let row = adj[self.members[i]] & set.0;
            self.lap[i * k + i] = row.count_ones() as i128;
            for j in 0..k {
                if i != j && row >> self.members[j] & 1 == 1 {
                    self.lap[i * k + j] = -1;
                }
            }
        }
        let lap = std::mem::take(&mut self.lap);
        let out = self.cofactor(k, &lap);
        self.lap = lap;
        out
    }

    /// Spanning trees of `G[set]` that contain every edge of `forest`,
    /// computed as spanning trees of `G[set] / forest` with parallel edges
    /// kept and loops dropped. `forest` must be acyclic with all endpoints
    /// inside `set`.
    pub fn induced_containing(&mut self, adj: &[u64], set: VertexSet, forest: &[(usize, usize)]) -> Kappa {
        if forest.is_empty() {
            return self.induced(adj, set);
        }
        self.members.clear();
        self.members.extend(set.iter());
        let n = adj.len();
        // union-find over original vertex ids, then compress to class indices
        self.class.clear();
        self.class.extend(0..n);
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in forest {
            let (ra, rb) = (find(&mut self.class, a), find(&mut self.class, b));
            if ra != rb {
                self.class[ra] = rb;
            }
        }
        let mut index_of_root = vec![usize::MAX; n];
        let mut classes = 0;
        let mut class_of = vec![0usize; self.members.len()];
        for (i, &v) in self.members.iter().enumerate() {
            let r = find(&mut self.class, v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = classes;
                classes += 1;
            }
            class_of[i] = index_of_root[r];
        }
        let k = classes;
        if k == 1 {
            return Kappa::Small(1);
        }
        self.lap.clear();
        self.lap.resize(k * k, 0);
        for (i, &u) in self.members.iter().enumerate() {
            for (j, &v) in self.members.iter().enumerate().skip(i + 1) {
                let (ci, cj) = (class_of[i], class_of[j]);
                if ci != cj && adj[u] >> v & 1 == 1 {
                    self.lap[ci * k + cj] -= 1;
                    self.lap[cj * k + ci] -= 1;
                    self.lap[ci * k + ci] += 1;
                    self.lap[cj * k + cj] += 1;
                }
            }
        }
        let lap = std::mem::take(&mut self.lap);
        let out = self.cofactor(k, &lap);
        self.lap = lap;
        out
    }

    /// Determinant of the Laplacian with its last row and column removed.
    fn cofactor(&mut self, k: usize, lap: &[i128]) -> Kappa {
        if k <= 1 {
            return Kappa::Small(1);
        }
        let m = k - 1;
        self.work.clear();
        for i in 0..m {
            self.work.extend_from_slice(&lap[i * k..i * k + m]);
        }
        match bareiss_i128(&mut self.work, m) {
            Some(d) => Kappa::Small(d.unsigned_abs()),
            None => {
                let mut big: Vec<BigInt> = (0..m)
                    .flat_map(|i| lap[i * k..i * k + m].iter().map(|&x| BigInt::from(x)))
                    .collect();
                let d = bareiss_big(&mut big, m);
                let d = d.abs().to_biguint().expect("nonnegative");
                match u128::try_from(&d) {
                    Ok(x) => Kappa::Small(x),
                    Err(_) => Kappa::Big(d),
                }
            }
        }
    }
}

/// Fraction-free elimination over `i128`. `None` on overflow, and also for
/// a singular matrix, which the `BigInt` pass then reports as zero.
fn bareiss_i128(a: &mut [i128], m: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..m {
        if a[p * m + p] == 0 {
            let swap = (p + 1..m).find(|&r| a[r * m + p] != 0)?;
            for c in 0..m {
                a.swap(p * m + c, swap * m + c);
            }
            sign = -sign;
        }
        let piv = a[p * m + p];
        for i in p + 1..m {
            let lead = a[i * m + p];
            for j in p + 1..m {
                let x = a[i * m + j].checked_mul(piv)?;
                let y = lead.checked_mul(a[p * m + j])?;
                a[i * m + j] = x.checked_sub(y)? / prev;
            }
            a[i * m + p] = 0;
        }
        prev = piv;
    }
    Some(sign * a[(m - 1) * m + (m - 1)])
}

fn bareiss_big(a: &mut [BigInt], m: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for p in 0..m {
        if a[p * m + p].is_zero() {
            let Some(swap) = (p + 1..m).find(|&r| !a[r * m + p].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..m {
                a.swap(p * m + c, swap * m + c);
            }
            negate = !negate;
        }
        let piv = a[p * m + p].clone();
        for i in p + 1..m {
            let lead = a[i * m + p].clone();
            for j in p + 1..m {
                let v = (&a[i * m + j] * &piv - &lead * &a[p * m + j]) / &prev;
                a[i * m + j] = v;
            }
            a[i * m + p] = BigInt::zero();
        }
        prev = piv;
    }
    let d = a[(m - 1) * m + (m - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}
