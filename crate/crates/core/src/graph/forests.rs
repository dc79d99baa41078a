//! Partitions of the edge set into forests.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Edge ids on the path between `u` and `v` in the forest formed by the
/// edges with `forest_of[e] == Some(i)`, or `None` if disconnected there.
fn forest_path(g: &Graph, forest_of: &[Option<usize>], i: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let mut via: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut q = VecDeque::from([u]);
    while let Some(x) = q.pop_front() {
        if x == v {
            let mut path = Vec::new();
            let mut cur = v;
            while let Some((p, e)) = via[cur] {
                path.push(e);
                cur = p;
            }
            return Some(path);
        }
        for &(y, e) in g.incident(x) {
            if forest_of[e] == Some(i) && !seen[y] {
                seen[y] = true;
                via[y] = Some((x, e));
                q.push_back(y);
            }
        }
    }
    None
}

/// Tries to add edge `e0` to one of `k` forests, reshuffling other edges
/// along a shortest exchange sequence.
fn insert(g: &Graph, forest_of: &mut [Option<usize>], k: usize, e0: usize) -> bool {
    let mut label: Vec<Option<usize>> = vec![None; g.m()];
    let mut queued = vec![false; g.m()];
    queued[e0] = true;
    let mut q = VecDeque::from([e0]);
    while let Some(x) = q.pop_front() {
        let (u, v) = g.edge(x);
        for i in 0..k {
            if forest_of[x] == Some(i) {
                continue;
            }
            match forest_path(g, forest_of, i, u, v) {
                None => {
                    let (mut cur, mut target) = (x, i);
                    loop {
                        let old = forest_of[cur];
                        forest_of[cur] = Some(target);
                        match label[cur] {
                            Some(y) => {
                                cur = y;
                                target = old.expect("displaced edges sit in a forest");
                            }
                            None => break,
                        }
                    }
                    return true;
                }
                Some(path) => {
                    for f in path {
                        if !queued[f] {
                            queued[f] = true;
                            label[f] = Some(x);
                            q.push_back(f);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Partitions the edges into forests, inserting edges one at a time and
/// opening a new forest only when no exchange sequence makes room.
pub fn forest_peel(g: &Graph) -> Vec<Vec<usize>> {
    let mut forest_of: Vec<Option<usize>> = vec![None; g.m()];
    let mut k = 0;
    for e in 0..g.m() {
        if !insert(g, &mut forest_of, k, e) {
            forest_of[e] = Some(k);
            k += 1;
        }
    }
    let mut parts = vec![Vec::new(); k];
    for (e, f) in forest_of.iter().enumerate() {
        parts[f.expect("every edge placed")].push(e);
    }
    parts
}

/// Whether the given edge ids form an acyclic subgraph (union-find).
pub fn is_acyclic(g: &Graph, edges: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in edges {
        let (u, v) = g.edge(e);
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Whether `parts` partitions the edge ids of `g` into forests.
pub fn is_forest_partition(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.m()];
    for part in parts {
        for &e in part {
            if e >= g.m() || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        if !is_acyclic(g, part) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use proptest::prelude::*;

    #[test]
    fn tree_is_one_forest() {
        assert_eq!(forest_peel(&generate::random_tree(30, 1)).len(), 1);
    }

    #[test]
    fn k4_two_forests() {
        let g = generate::complete(4);
        let parts = forest_peel(&g);
        assert!(is_forest_partition(&g, &parts));
        // Density: 6 edges, each forest holds at most 3.
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn planar_grids_at_most_three() {
        for g in [generate::grid_tri(9, 9), generate::grid_rect(9, 9), generate::grid_hex(8, 8)] {
            let parts = forest_peel(&g);
            assert!(is_forest_partition(&g, &parts));
            assert!(parts.len() <= 3);
        }
    }

    #[test]
    fn complete_graphs_meet_density() {
        // Nash-Williams for K_n gives ceil(n/2).
        for n in 2..10 {
            let g = generate::complete(n);
            let parts = forest_peel(&g);
            assert!(is_forest_partition(&g, &parts));
            assert_eq!(parts.len(), n.div_ceil(2), "n={n}");
        }
    }

    proptest! {
        #[test]
        fn always_a_partition(n in 2usize..12, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n { for v in u+1..n { if r.gen_bool(0.5) { edges.push((u, v)); } } }
            let g = Graph::new(n, edges).unwrap();
            let parts = forest_peel(&g);
            prop_assert!(is_forest_partition(&g, &parts));
            // Never below the density floor ceil(m / (n-1)).
            prop_assert!(parts.len() * (n - 1) >= g.m());
        }
    }
}
