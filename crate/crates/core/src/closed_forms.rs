//! Closed-form subtree counts for complete graphs, joins `K_n ∨ mK_1`,
//! paths and stars.

use crate::error::{Error, Result};
use crate::numeric::{binomial, pow, ratio, ratio_from_ints, Count, Ratio};
use num_traits::Zero;

/// `s_k(K_n) = C(n, k) k^{k-2}`, with `k^{k-2} = 1` for `k <= 2`.
pub fn s_k_complete(n: u64, k: u64) -> Result<Count> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} outside 1..={n}")));
    }
    let trees = if k <= 2 { Count::from(1u32) } else { pow(k, k - 2) };
    Ok(binomial(n, k) * trees)
}

/// `N(K_n)`.
pub fn n_complete(n: u64) -> Count {
    (1..=n).map(|k| s_k_complete(n, k).expect("k in range")).sum()
}

/// `R(K_n)`.
pub fn r_complete(n: u64) -> Count {
    (1..=n)
        .map(|k| s_k_complete(n, k).expect("k in range") * k)
        .sum()
}

/// `μ(K_n)`.
pub fn mu_complete(n: u64) -> Result<Ratio> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    Ok(ratio(&r_complete(n), &n_complete(n)))
}

/// Spanning trees of `K_n ∨ mK_1`: `(n+m)^{n-1} n^{m-1}`.
pub fn f(n: u64, m: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::InvalidParameter("f needs n >= 1".into()));
    }
    if m == 0 {
        return Ok(if n == 1 { Count::from(1u32) } else { pow(n, n - 2) });
    }
    Ok(pow(n + m, n - 1) * pow(n, m - 1))
}

/// Spanning trees of `K_n ∨ mK_1` minus an edge inside the clique:
/// `(n+m-2)(n+m)^{n-2} n^{m-1}`.
pub fn g_formula(n: u64, m: u64) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidParameter("g needs n >= 2".into()));
    }
    let lead = Count::from(n + m - 2);
    if lead.is_zero() {
        return Ok(lead);
    }
    if m == 0 {
        // (n-2) n^{n-2} n^{-1}
        return Ok(lead * pow(n, n - 3));
    }
    Ok(lead * pow(n + m, n - 2) * pow(n, m - 1))
}

/// The join `K_n ∨ mK_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinSpec {
    pub n: u64,
    pub m: u64,
}

impl JoinSpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("join needs n >= 1".into()));
        }
        if n + m > 64 {
            return Err(Error::TooLarge {
                what: "join order",
                n: (n + m) as usize,
                limit: 64,
            });
        }
        Ok(JoinSpec { n, m })
    }
}

/// Subtree totals of a join and of the join minus a clique edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCounts {
    pub n: Count,
    pub r: Count,
    pub n_minus_e: Count,
    pub r_minus_e: Count,
}

impl JoinCounts {
    pub fn mu(&self) -> Ratio {
        ratio(&self.r, &self.n)
    }

    pub fn mu_minus_e(&self) -> Ratio {
        ratio(&self.r_minus_e, &self.n_minus_e)
    }
}

/// `(N, R, N(G∖e), R(G∖e))` for `G = K_n ∨ mK_1` and `e` joining two clique
/// vertices. With `n = 1` there is no such edge and the last two equal the
/// first two.
pub fn join_counts(spec: JoinSpec) -> Result<JoinCounts> {
    let JoinSpec { n, m } = spec;
    let mut out = JoinCounts {
        n: Count::from(m),
        r: Count::from(m),
        n_minus_e: Count::from(m),
        r_minus_e: Count::from(m),
    };
    for i in 0..=m {
        let ci = binomial(m, i);
        for j in 1..=n {
            let fji = f(j, i)?;
            let whole = binomial(n, j) * &fji;
            let through = if j >= 2 { binomial(n - 2, j - 2) } else { Count::zero() };
            let deleted = (binomial(n, j) - &through) * &fji
                + if through.is_zero() { Count::zero() } else { &through * g_formula(j, i)? };
            let order = i + j;
            out.n += &ci * &whole;
            out.r += &ci * &whole * order;
            out.n_minus_e += &ci * &deleted;
            out.r_minus_e += &ci * &deleted * order;
        }
    }
    Ok(out)
}

/// `μ(P_n) = (n+2)/3`.
pub fn mu_path(n: u64) -> Result<Ratio> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    Ok(ratio_from_ints(n as i64 + 2, 3))
}

/// Subtrees of the star of order `n`: `2^{n-1} + n - 1`.
pub fn star_subtree_count(n: u64) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidParameter("star needs n >= 2".into()));
    }
    Ok(pow(2, n - 1) + (n - 1))
}
