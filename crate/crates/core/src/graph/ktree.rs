//! Recognition of k-trees and their construction from a central clique.

use serde::Serialize;

use crate::graph::{metrics, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KTreeStructure {
    pub k: usize,
    /// Every `(k+1)`-clique, each sorted, in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    /// The `(k+1)`-clique minimising the largest distance from any vertex.
    pub central: Vec<usize>,
    /// Largest distance from a vertex to `central`.
    pub central_radius: usize,
    /// Vertices outside `central` in construction order, each with the
    /// sorted `k`-clique it attaches to.
    pub order: Vec<(usize, Vec<usize>)>,
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Infers `k` from the edge count `kn - k(k+1)/2`, if some `k >= 1` fits.
pub fn infer_k(g: &Graph) -> Option<usize> {
    let n = g.n();
    (1..n).find(|&k| k * n >= k * (k + 1) / 2 && k * n - k * (k + 1) / 2 == g.m())
}

/// All `(k+1)`-cliques of `g` if it is a `k`-tree, found by peeling
/// simplicial degree-`k` vertices (smallest id first).
fn peel(g: &Graph, k: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if k == 0 || n < k + 1 || k * n - k * (k + 1) / 2 != g.m() || !g.is_simple() {
        return None;
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut cliques = Vec::new();
    for _ in 0..n - k - 1 {
        let v = (0..n).find(|&v| {
            alive[v] && deg[v] == k && {
                let nb: Vec<usize> = g.neighbours(v).filter(|&w| alive[w]).collect();
                is_clique(g, &nb)
            }
        })?;
        let mut c: Vec<usize> = g.neighbours(v).filter(|&w| alive[w]).collect();
        alive[v] = false;
        for &w in &c {
            deg[w] -= 1;
        }
        c.push(v);
        c.sort_unstable();
        cliques.push(c);
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if !is_clique(g, &rest) {
        return None;
    }
    cliques.push(rest);
    cliques.sort();
    Some(cliques)
}

/// Construction order of `g` starting from `root`: each added vertex is
/// adjacent to exactly `k` present vertices, which form a clique.
pub fn construction_order(g: &Graph, k: usize, root: &[usize]) -> Option<Vec<(usize, Vec<usize>)>> {
    let n = g.n();
    let mut present = vec![false; n];
    for &v in root {
        present[v] = true;
    }
    let mut order = Vec::with_capacity(n - root.len());
    while order.len() + root.len() < n {
        let (v, parent) = (0..n).filter(|&v| !present[v]).find_map(|v| {
            let nb: Vec<usize> = g.neighbours(v).filter(|&w| present[w]).collect();
            (nb.len() == k && is_clique(g, &nb)).then_some((v, nb))
        })?;
        let mut parent = parent;
        parent.sort_unstable();
        present[v] = true;
        order.push((v, parent));
    }
    Some(order)
}

pub fn ktree_structure(g: &Graph, k: usize) -> Option<KTreeStructure> {
    let cliques = peel(g, k)?;
    let dist: Vec<Vec<Option<usize>>> = (0..g.n()).map(|s| metrics::distances(g, s)).collect();
    let radius_of = |c: &[usize]| -> usize {
        (0..g.n())
            .map(|v| c.iter().map(|&u| dist[u][v].unwrap_or(usize::MAX)).min().unwrap())
            .max()
            .unwrap_or(0)
    };
    // Cliques are sorted lexicographically, so the first minimum wins ties.
    let (central, central_radius) = cliques
        .iter()
        .map(|c| (c.clone(), radius_of(c)))
        .min_by_key(|(_, r)| *r)
        .expect("a k-tree has a clique");
    let order = construction_order(g, k, &central)?;
    Some(KTreeStructure { k, cliques, central, central_radius, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn complete_graph() {
        let s = ktree_structure(&generate::complete(4), 3).unwrap();
        assert_eq!(s.central, vec![0, 1, 2, 3]);
        assert!(s.order.is_empty());
    }

    #[test]
    fn fan() {
        // Triangle chain: path_power(6, 2) is a 2-tree on 6 vertices.
        let g = generate::path_power(6, 2);
        let s = ktree_structure(&g, 2).unwrap();
        assert_eq!(s.order.len(), 3);
        assert_eq!(s.cliques.len(), 4);
        let mut present: Vec<usize> = s.central.clone();
        for (v, parent) in &s.order {
            let nb: Vec<usize> = g.neighbours(*v).filter(|w| present.contains(w)).collect();
            assert_eq!(nb.len(), 2);
            assert!(parent.iter().all(|p| nb.contains(p)));
            present.push(*v);
        }
    }

    #[test]
    fn rejects_non_ktrees() {
        assert!(ktree_structure(&generate::cycle(5), 2).is_none());
        assert!(ktree_structure(&generate::complete_bipartite(2, 3), 2).is_none());
        assert_eq!(infer_k(&generate::path_power(10, 3)), Some(3));
    }

    #[test]
    fn random_ktrees_rebuild_from_every_clique() {
        for k in 1..4 {
            for seed in 0..10 {
                let g = generate::random_ktree(12, k, seed);
                let s = ktree_structure(&g, k).unwrap();
                assert_eq!(s.cliques.len(), 12 - k);
                for c in &s.cliques {
                    let order = construction_order(&g, k, c).expect("any clique is a valid root");
                    assert_eq!(order.len(), 12 - k - 1);
                }
            }
        }
    }

    #[test]
    fn central_clique_of_long_path_power() {
        let g = generate::path_power(15, 2);
        let s = ktree_structure(&g, 2).unwrap();
        // diam = 7, every vertex within floor(7/2) = 3 of the central clique.
        assert!(s.central_radius <= 3);
        assert_eq!(s.central, vec![6, 7, 8]);
    }
}
