//! BFS distances, eccentricities, radius and diameter.
//!
//! For digraphs an unreachable pair has no distance and the source's
//! eccentricity is then undefined (`None`). `reach_ecc` keeps the largest
//! finite distance instead, which is what layer-by-layer protection uses.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    /// `dist[u][v]`, `None` when `v` is unreachable from `u`.
    pub dist: Vec<Vec<Option<usize>>>,
    pub ecc: Vec<Option<usize>>,
    /// Largest finite distance from each vertex.
    pub reach_ecc: Vec<usize>,
    /// Number of vertices reachable from each vertex, itself included.
    pub reach_size: Vec<usize>,
    /// Minimum eccentricity over vertices whose eccentricity is defined.
    pub rad: Option<usize>,
    /// Largest finite pairwise distance.
    pub diam: usize,
}

fn bfs(n: usize, src: usize, next: &dyn Fn(usize) -> Vec<usize>) -> Vec<Option<usize>> {
    let mut d = vec![None; n];
    d[src] = Some(0);
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        let du = d[u].unwrap();
        for w in next(u) {
            if d[w].is_none() {
                d[w] = Some(du + 1);
                q.push_back(w);
            }
        }
    }
    d
}

fn from_rows(dist: Vec<Vec<Option<usize>>>) -> Metrics {
    let ecc: Vec<Option<usize>> = dist
        .iter()
        .map(|row| row.iter().try_fold(0usize, |acc, d| d.map(|d| acc.max(d))))
        .collect();
    let reach_ecc: Vec<usize> = dist.iter().map(|row| row.iter().flatten().copied().max().unwrap_or(0)).collect();
    let reach_size = dist.iter().map(|row| row.iter().flatten().count()).collect();
    let rad = ecc.iter().flatten().copied().min();
    let diam = reach_ecc.iter().copied().max().unwrap_or(0);
    Metrics { dist, ecc, reach_ecc, reach_size, rad, diam }
}

pub fn graph_metrics(g: &Graph) -> Metrics {
    let next = |v: usize| g.neighbours(v).collect::<Vec<_>>();
    from_rows((0..g.n()).map(|s| bfs(g.n(), s, &next)).collect())
}

pub fn orientation_metrics(o: &Orientation) -> Metrics {
    let next = |v: usize| o.out_neighbours(v).to_vec();
    from_rows((0..o.n()).map(|s| bfs(o.n(), s, &next)).collect())
}

/// Undirected distances from one source.
pub fn distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let next = |v: usize| g.neighbours(v).collect::<Vec<_>>();
    bfs(g.n(), src, &next)
}

/// Directed distances from one source.
pub fn out_distances(o: &Orientation, src: usize) -> Vec<Option<usize>> {
    let next = |v: usize| o.out_neighbours(v).to_vec();
    bfs(o.n(), src, &next)
}
