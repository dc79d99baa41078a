//! Labelled enumeration of small connected graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUM_N: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

fn connected(n: usize, adj: &[u64]) -> bool {
    if n == 0 {
        return true;
    }
    let all = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        for v in crate::bitset::bits(frontier) {
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Every labelled simple connected graph on `n` vertices, in increasing
/// order of the edge mask over pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::InvalidParams(format!(
            "enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}"
        )));
    }
    let pairs = pairs(n);
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut adj = vec![0u64; n];
        let mut edges = Vec::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                edges.push((u, v));
            }
        }
        connected(n, &adj).then(|| Graph::new(n, edges).expect("simple"))
    }))
}
