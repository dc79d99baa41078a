//! Clique and biclique detection for lower bounds.

use crate::graph::Graph;

/// A maximum clique (sorted), by branch and bound over candidate lists.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    fn expand(g: &Graph, current: &mut Vec<usize>, cand: Vec<usize>, best: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if current.len() + cand.len() - i <= best.len() {
                return;
            }
            current.push(v);
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            expand(g, current, next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    if g.n() > 0 {
        best.push(0);
    }
    expand(g, &mut Vec::new(), (0..g.n()).collect(), &mut best);
    best.sort_unstable();
    best
}

/// Sides `(A, B)` of a complete bipartite subgraph, chosen greedily to make
/// `|A||B| / (|A|+|B|)` large. Exact when `g` itself is complete bipartite.
pub fn greedy_biclique(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.m() == 0 {
        return None;
    }
    if let Some(side) = g.bipartition() {
        let a: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
        let b: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
        if g.is_connected() && a.len() * b.len() == g.m() {
            return Some(if a.len() <= b.len() { (a, b) } else { (b, a) });
        }
    }
    let score = |a: usize, b: usize| (a * b) as f64 / (a + b) as f64;
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut best_score = 0.0;
    for v in 0..g.n() {
        let mut a = vec![v];
        let mut b: Vec<usize> = g.neighbours(v).collect();
        b.sort_unstable();
        loop {
            let s = score(a.len(), b.len());
            if s > best_score {
                best_score = s;
                best = Some((a.clone(), b.clone()));
            }
            // Extend A by the vertex keeping most of B.
            let next = (0..g.n())
                .filter(|u| !a.contains(u) && !b.contains(u) && a.iter().all(|&x| !g.has_edge(x, *u)))
                .map(|u| (b.iter().filter(|&&w| g.has_edge(u, w)).count(), u))
                .filter(|&(c, _)| c > 0)
                .max_by_key(|&(c, u)| (c, std::cmp::Reverse(u)));
            let Some((_, u)) = next else { break };
            let nb: Vec<usize> = b.iter().copied().filter(|&w| g.has_edge(u, w)).collect();
            if score(a.len() + 1, nb.len()) < s {
                break;
            }
            a.push(u);
            b = nb;
        }
    }
    best.map(|(mut a, b)| {
        a.sort_unstable();
        if a.len() <= b.len() {
            (a, b)
        } else {
            (b, a)
        }
    })
}
