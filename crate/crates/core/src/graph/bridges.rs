//! Bridges and 2-edge-connected components.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeDecomposition {
    /// Edge ids of all bridges, ascending.
    pub bridges: Vec<usize>,
    /// Component index per vertex after deleting the bridges.
    pub component: Vec<usize>,
    /// Members of each component, ascending; components ordered by their
    /// smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl BridgeDecomposition {
    pub fn is_bridge(&self, e: usize) -> bool {
        self.bridges.binary_search(&e).is_ok()
    }
}

/// Finds all bridges with an iterative low-link DFS. Parallel edges are
/// handled by skipping only the tree edge's own id.
pub fn bridges(g: &Graph) -> BridgeDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_bridge = vec![false; g.m()];
    let mut clock = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent edge id, next incidence index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        while let Some(top) = stack.last_mut() {
            let (v, pe, idx) = *top;
            if let Some(&(w, e)) = g.incident(v).get(idx) {
                top.2 += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        is_bridge[pe] = true;
                    }
                }
            }
        }
    }
    let bridges: Vec<usize> = (0..g.m()).filter(|&e| is_bridge[e]).collect();
    let reduced = g.edge_subgraph((0..g.m()).filter(|&e| !is_bridge[e]));
    let components = reduced.components();
    let mut component = vec![0; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            component[v] = i;
        }
    }
    BridgeDecomposition { bridges, component, components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use proptest::prelude::*;

    #[test]
    fn path_edges_are_bridges() {
        let d = bridges(&generate::path(3));
        assert_eq!(d.bridges, vec![0, 1]);
        assert_eq!(d.components.len(), 3);
    }

    #[test]
    fn petersen_is_bridgeless() {
        let d = bridges(&generate::petersen());
        assert!(d.bridges.is_empty());
        assert_eq!(d.components.len(), 1);
    }

    #[test]
    fn two_triangles_joined() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        let d = bridges(&g);
        assert_eq!(d.bridges, vec![6]);
        assert_eq!(d.components, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = Graph::multigraph(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&g).bridges, vec![2]);
    }

    proptest! {
        /// An edge is a bridge iff deleting it increases the component count.
        #[test]
        fn matches_deletion_oracle(n in 2usize..10, seed in any::<u64>(), density in 0.1f64..0.6) {
            use rand::{Rng, SeedableRng};
            let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n { for v in u+1..n { if r.gen_bool(density) { edges.push((u, v)); } } }
            let g = Graph::new(n, edges).unwrap();
            let d = bridges(&g);
            let base = g.components().len();
            for e in 0..g.m() {
                let h = g.edge_subgraph((0..g.m()).filter(|&x| x != e));
                prop_assert_eq!(d.is_bridge(e), h.components().len() > base);
            }
        }
    }
}
