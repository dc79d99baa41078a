//! Embedding a graph into a regular supergraph by repeated doubling.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A `delta`-regular graph whose first `n` vertices induce a supergraph of
/// `g` with identical ids. Each round takes two copies and joins the copies
/// of every vertex whose degree is still below `delta`.
pub fn regularize(g: &Graph, delta: usize) -> Result<Graph> {
    if delta < g.max_degree() {
        return Err(Error::InvalidParams(format!(
            "target degree {delta} is below the maximum degree {}",
            g.max_degree()
        )));
    }
    let mut cur = g.clone();
    while cur.n() > 0 && cur.min_degree() < delta {
        let n = cur.n();
        let mut edges = cur.edges().to_vec();
        edges.extend(cur.edges().iter().map(|&(u, v)| (u + n, v + n)));
        edges.extend((0..n).filter(|&v| cur.degree(v) < delta).map(|v| (v, v + n)));
        cur = Graph::new(2 * n, edges)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn is_regular(g: &Graph, d: usize) -> bool {
        (0..g.n()).all(|v| g.degree(v) == d)
    }

    #[test]
    fn edge_becomes_c4() {
        let r = regularize(&generate::path(2), 2).unwrap();
        assert_eq!((r.n(), r.m()), (4, 4));
        assert!(is_regular(&r, 2) && r.is_connected());
    }

    #[test]
    fn p3_becomes_c6() {
        let r = regularize(&generate::path(3), 2).unwrap();
        assert_eq!((r.n(), r.m()), (6, 6));
        assert!(is_regular(&r, 2) && r.is_connected());
    }

    #[test]
    fn claw_embeds_at_identity() {
        let g = generate::star(3);
        let r = regularize(&g, 3).unwrap();
        assert!(is_regular(&r, 3));
        assert!(g.edges().iter().all(|&(u, v)| r.has_edge(u, v)));
        // delta - min degree = 2 rounds at most.
        assert!(r.n() <= g.n() * 4);
    }
}
