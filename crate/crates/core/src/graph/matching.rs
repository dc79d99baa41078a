//! Maximum matchings in general graphs (Edmonds' blossom algorithm) and
//! perfect matchings containing a prescribed edge.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_path(v) {
                while u != NONE {
                    let pv = self.parent[u];
                    let ppv = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = ppv;
                }
            }
        }
        self.mate
    }
}

/// Maximum matching as a mate array over `alive` vertices (`usize::MAX`
/// for unmatched or excluded vertices).
fn max_matching_mates(g: &Graph, alive: &[bool]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        if alive[u] && alive[v] && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    Blossom::new(&adj).run()
}

/// Edge ids of a maximum matching.
pub fn maximum_matching(g: &Graph) -> Vec<usize> {
    let mates = max_matching_mates(g, &vec![true; g.n()]);
    mates_to_edges(g, &mates)
}

fn mates_to_edges(g: &Graph, mates: &[usize]) -> Vec<usize> {
    mates
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| g.edge_id(u, v).expect("matched pair is adjacent"))
        .collect()
}

/// A perfect matching (edge ids, ascending) that contains `must_include`
/// when given, or `None` if no such matching exists.
pub fn perfect_matching(g: &Graph, must_include: Option<usize>) -> Option<Vec<usize>> {
    let mut alive = vec![true; g.n()];
    if let Some(e) = must_include {
        let (u, v) = g.edge(e);
        alive[u] = false;
        alive[v] = false;
    }
    let mates = max_matching_mates(g, &alive);
    if (0..g.n()).any(|v| alive[v] && mates[v] == NONE) {
        return None;
    }
    let mut edges = mates_to_edges(g, &mates);
    edges.extend(must_include);
    edges.sort_unstable();
    Some(edges)
}

/// Whether `edges` is a perfect matching of `g`.
pub fn is_perfect_matching(g: &Graph, edges: &[usize]) -> bool {
    let mut covered = vec![0usize; g.n()];
    for &e in edges {
        let (u, v) = g.edge(e);
        covered[u] += 1;
        covered[v] += 1;
    }
    covered.iter().all(|&c| c == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    /// Backtracking oracle: does a perfect matching containing `e` exist?
    fn exists_with(g: &Graph, forced: Option<usize>) -> bool {
        fn go(g: &Graph, covered: &mut Vec<bool>) -> bool {
            let Some(v) = (0..g.n()).find(|&v| !covered[v]) else {
                return true;
            };
            for &(w, _) in g.incident(v) {
                if !covered[w] {
                    covered[v] = true;
                    covered[w] = true;
                    if go(g, covered) {
                        return true;
                    }
                    covered[v] = false;
                    covered[w] = false;
                }
            }
            false
        }
        let mut covered = vec![false; g.n()];
        if let Some(e) = forced {
            let (u, v) = g.edge(e);
            covered[u] = true;
            covered[v] = true;
        }
        go(g, &mut covered)
    }

    #[test]
    fn k4_with_forced_edge() {
        let g = generate::complete(4);
        let m = perfect_matching(&g, Some(0)).unwrap();
        assert_eq!(m.iter().map(|&e| g.edge(e)).collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn triple_edge() {
        let g = Graph::multigraph(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(perfect_matching(&g, Some(1)), Some(vec![1]));
    }

    #[test]
    fn petersen_every_forced_edge() {
        let g = generate::petersen();
        for e in 0..g.m() {
            let m = perfect_matching(&g, Some(e)).unwrap();
            assert_eq!(m.len(), 5);
            assert!(m.contains(&e));
            assert!(is_perfect_matching(&g, &m));
            assert!(exists_with(&g, Some(e)));
            // The complement is a 2-factor.
            let mut deg = vec![0; g.n()];
            for f in (0..g.m()).filter(|f| !m.contains(f)) {
                let (u, v) = g.edge(f);
                deg[u] += 1;
                deg[v] += 1;
            }
            assert!(deg.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn agrees_with_backtracking_on_small_graphs() {
        for g in crate::graph::enumerate::connected_graphs(6).unwrap().step_by(37) {
            assert_eq!(perfect_matching(&g, None).is_some(), exists_with(&g, None));
            for e in 0..g.m() {
                assert_eq!(perfect_matching(&g, Some(e)).is_some(), exists_with(&g, Some(e)));
            }
        }
    }

    #[test]
    fn odd_cycle_blossom() {
        // Triangle with a pendant on each corner: needs blossom contraction.
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = perfect_matching(&g, None).unwrap();
        assert!(is_perfect_matching(&g, &m));
        assert_eq!(maximum_matching(&generate::cycle(5)).len(), 2);
    }
}
