use serde::{Deserialize, Serialize};

use super::{from_heads, toward_roots};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{colouring, forests, fvs, Graph};
use crate::orientation::Orientation;

/// Every edge of a tree points towards `root`.
pub fn orient_tree(t: &Graph, root: usize) -> Result<Orientation> {
    if root >= t.n() {
        return Err(Error::InvalidParams(format!("root {root} out of range")));
    }
    if !t.is_tree() {
        return Err(Error::pre("tree", "input is not a tree"));
    }
    let mut head = vec![usize::MAX; t.m()];
    let all: Vec<usize> = (0..t.m()).collect();
    toward_roots(t, &all, &[root], &mut head);
    Ok(from_heads(t, &head))
}

/// Repeatedly orients a cycle cyclically and deletes it; the leftover
/// forest points towards the smallest vertex of each tree. A vertex on `c`
/// removed cycles keeps `c` out-arcs from them and at most one tree arc.
pub fn orient_half(g: &Graph) -> Orientation {
    let mut head = vec![usize::MAX; g.m()];
    let mut alive = vec![true; g.m()];
    while let Some(cycle) = find_cycle(g, &alive) {
        for &(e, tail) in &cycle {
            let (u, v) = g.edge(e);
            head[e] = if tail == u { v } else { u };
            alive[e] = false;
        }
    }
    let rest: Vec<usize> = (0..g.m()).filter(|&e| alive[e]).collect();
    let ok = toward_roots(g, &rest, &[], &mut head);
    debug_assert!(ok);
    from_heads(g, &head)
}

/// A cycle among edges with `alive[e]`, as `(edge, tail)` pairs in
/// traversal order, found by DFS from the smallest vertex.
fn find_cycle(g: &Graph, alive: &[bool]) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let mut state = vec![0u8; n]; // 0 new, 1 on stack, 2 finished
    let mut via: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); n]; // (parent, edge)
    for s in 0..n {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(top) = stack.last_mut() {
            let (v, idx) = *top;
            let Some(&(w, e)) = g.incident(v).get(idx) else {
                state[v] = 2;
                stack.pop();
                continue;
            };
            top.1 += 1;
            if !alive[e] || e == via[v].1 {
                continue;
            }
            match state[w] {
                0 => {
                    state[w] = 1;
                    via[w] = (v, e);
                    stack.push((w, 0));
                }
                1 => {
                    // Back edge v -> w closes a cycle w ... v -> w.
                    let mut cyc = vec![(e, v)];
                    let mut cur = v;
                    while cur != w {
                        let (p, pe) = via[cur];
                        cyc.push((pe, p));
                        cur = p;
                    }
                    // Walk w -> ... -> v -> w.
                    cyc.reverse();
                    return Some(cyc);
                }
                _ => {}
            }
        }
    }
    None
}

/// Connected graph with at most one cycle: the cycle is oriented
/// cyclically and every other edge points towards it, so all outdegrees
/// are 1 when a cycle exists. Trees are rooted at vertex 0.
pub fn orient_unicyclic(g: &Graph) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::pre("unicyclic", "input is disconnected"));
    }
    if g.m() > g.n() {
        return Err(Error::pre("unicyclic", format!("{} edges on {} vertices: more than one cycle", g.m(), g.n())));
    }
    let mut head = vec![usize::MAX; g.m()];
    let alive = vec![true; g.m()];
    let mut roots = Vec::new();
    if let Some(cycle) = find_cycle(g, &alive) {
        for &(e, tail) in &cycle {
            let (u, v) = g.edge(e);
            head[e] = if tail == u { v } else { u };
            roots.push(tail);
        }
    }
    let rest: Vec<usize> = (0..g.m()).filter(|&e| head[e] == usize::MAX).collect();
    // All cycle vertices act as roots so tree edges flow into the cycle.
    let mut roots_sorted = roots.clone();
    roots_sorted.sort_unstable();
    let ok = toward_roots_multi(g, &rest, &roots_sorted, &mut head);
    debug_assert!(ok);
    Ok(from_heads(g, &head))
}

/// Like `toward_roots` but all `roots` start in one BFS queue, so each tree
/// hanging off the root set points into it.
fn toward_roots_multi(g: &Graph, edge_ids: &[usize], roots: &[usize], head: &mut [usize]) -> bool {
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for &e in edge_ids {
        let (u, v) = g.edge(e);
        inc[u].push((v, e));
        inc[v].push((u, e));
    }
    let mut seen = vec![false; g.n()];
    let mut done = vec![false; g.m()];
    let mut q = std::collections::VecDeque::new();
    for &r in roots {
        seen[r] = true;
        q.push_back(r);
    }
    if roots.is_empty() && g.n() > 0 {
        seen[0] = true;
        q.push_back(0);
    }
    while let Some(u) = q.pop_front() {
        for &(w, e) in &inc[u] {
            if done[e] {
                continue;
            }
            done[e] = true;
            if seen[w] {
                return false;
            }
            seen[w] = true;
            head[e] = u;
            q.push_back(w);
        }
    }
    edge_ids.iter().all(|&e| done[e])
}

/// Cyclic tournament on `vs` (odd length): `vs[i] -> vs[i+j mod len]` for
/// `j = 1..=(len-1)/2`. For even length the last vertex is a sink and the
/// rest form the odd tournament. Returns the head for each unordered pair.
pub(crate) fn complete_head(vs: &[usize], a: usize, b: usize) -> usize {
    let len = vs.len();
    let ia = vs.iter().position(|&v| v == a).expect("vertex in clique");
    let ib = vs.iter().position(|&v| v == b).expect("vertex in clique");
    let (odd_len, sink) = if len % 2 == 1 { (len, None) } else { (len - 1, Some(len - 1)) };
    if Some(ia) == sink {
        return a;
    }
    if Some(ib) == sink {
        return b;
    }
    let half = (odd_len - 1) / 2;
    let forward = (ib + odd_len - ia) % odd_len;
    if (1..=half).contains(&forward) {
        b
    } else {
        a
    }
}

/// The complete graph on `n >= 2` vertices with the cyclic orientation
/// (odd `n`) or the sink variant (even `n`, sink `n-1`).
pub fn orient_complete(n: usize) -> Result<Orientation> {
    if n < 2 {
        return Err(Error::InvalidParams("complete orientation needs n >= 2".into()));
    }
    orient_complete_graph(&crate::graph::generate::complete(n))
}

/// As [`orient_complete`] for a graph that must be complete.
pub fn orient_complete_graph(g: &Graph) -> Result<Orientation> {
    let n = g.n();
    if n < 2 || g.m() != n * (n - 1) / 2 || !g.is_simple() {
        return Err(Error::pre("complete", "input is not a complete graph on at least 2 vertices"));
    }
    let vs: Vec<usize> = (0..n).collect();
    Ok(Orientation::from_fn(g.clone(), |_, u, v| complete_head(&vs, u, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BipartiteSide {
    /// The colour class containing vertex 0 is the tail side.
    A,
    B,
    /// The side with the smaller maximum degree is the tail side.
    Auto,
}

/// All arcs go from one colour class to the other.
pub fn orient_bipartite(g: &Graph, side: BipartiteSide) -> Result<Orientation> {
    let colour = g.bipartition().ok_or_else(|| Error::pre("bipartite", "input is not bipartite"))?;
    let max_deg = |c: bool| (0..g.n()).filter(|&v| colour[v] == c).map(|v| g.degree(v)).max().unwrap_or(0);
    let tail_colour = match side {
        BipartiteSide::A => false,
        BipartiteSide::B => true,
        BipartiteSide::Auto => max_deg(true) < max_deg(false),
    };
    Ok(Orientation::from_fn(g.clone(), |_, u, v| if colour[u] == tail_colour { v } else { u }))
}

/// Each edge points to the endpoint in the part with the larger index.
pub fn orient_by_colouring(g: &Graph, parts: &[Vec<usize>]) -> Result<Orientation> {
    if !colouring::is_proper(g, parts) {
        return Err(Error::pre("colouring", "parts are not a proper colouring"));
    }
    let c = colouring::colour_of(g.n(), parts).expect("checked above");
    Ok(Orientation::from_fn(g.clone(), |_, u, v| if c[u] > c[v] { u } else { v }))
}

/// Each forest is oriented towards the smallest vertex of each of its
/// trees, so every vertex gains at most one out-arc per forest.
pub fn orient_by_forests(g: &Graph, parts: &[Vec<usize>]) -> Result<Orientation> {
    if !forests::is_forest_partition(g, parts) {
        return Err(Error::pre("forests", "parts are not a partition of the edges into forests"));
    }
    let mut head = vec![usize::MAX; g.m()];
    for part in parts {
        toward_roots(g, part, &[], &mut head);
    }
    Ok(from_heads(g, &head))
}

/// Edges into the feedback set point into it, edges inside it go from lower
/// to higher id, and the forest `g - F` points towards its smallest
/// vertices.
pub fn orient_by_fvs(g: &Graph, f: &VertexSet) -> Result<Orientation> {
    if !fvs::is_fvs(g, f) {
        return Err(Error::pre("fvs", "removing the given set leaves a cycle"));
    }
    let mut head = vec![usize::MAX; g.m()];
    let mut forest = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match (f.contains(u), f.contains(v)) {
            (true, true) => head[e] = u.max(v),
            (true, false) => head[e] = u,
            (false, true) => head[e] = v,
            (false, false) => forest.push(e),
        }
    }
    toward_roots(g, &forest, &[], &mut head);
    Ok(from_heads(g, &head))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn tree_examples() {
        let o = orient_tree(&generate::path(3), 1).unwrap();
        assert_eq!(o.out_degrees(), vec![1, 0, 1]);
        let o = orient_tree(&generate::star(4), 0).unwrap();
        assert_eq!(o.out_degrees(), vec![0, 1, 1, 1, 1]);
        let o = orient_tree(&generate::random_tree(50, 9), 0).unwrap();
        assert_eq!(o.max_out_degree(), 1);
        assert!(orient_tree(&generate::cycle(4), 0).is_err());
    }

    #[test]
    fn half_degree_bound() {
        for g in [generate::cycle(5), generate::complete(4), generate::complete(5), generate::petersen(), generate::grid_tri(6, 6)] {
            let o = orient_half(&g);
            for v in 0..g.n() {
                assert!(o.out_degree(v) <= g.degree(v) / 2 + 1, "vertex {v}");
            }
        }
        assert!(orient_half(&generate::cycle(5)).out_degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn unicyclic_examples() {
        assert!(orient_unicyclic(&generate::cycle(6)).unwrap().out_degrees().iter().all(|&d| d == 1));
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert!(orient_unicyclic(&g).unwrap().out_degrees().iter().all(|&d| d == 1));
        assert!(orient_unicyclic(&generate::complete(4)).is_err());
        assert!(orient_unicyclic(&generate::path(4)).unwrap().max_out_degree() <= 1);
    }

    #[test]
    fn complete_examples() {
        let o = orient_complete(5).unwrap();
        assert!(o.out_degrees().iter().all(|&d| d == 2));
        let o = orient_complete(3).unwrap();
        assert!(!o.is_acyclic());
        let o = orient_complete(6).unwrap();
        assert_eq!(o.out_degree(5), 0);
        assert_eq!(o.in_degree(5), 5);
        assert!((0..5).all(|v| o.out_degree(v) == 3));
    }

    #[test]
    fn bipartite_examples() {
        let o = orient_bipartite(&generate::complete_bipartite(2, 3), BipartiteSide::Auto).unwrap();
        assert_eq!(o.max_out_degree(), 2);
        assert!((2..5).all(|v| o.out_degree(v) == 2));
        let c4 = orient_bipartite(&generate::cycle(4), BipartiteSide::Auto).unwrap();
        assert_eq!(c4.out_degrees().iter().filter(|&&d| d == 0).count(), 2);
        assert!(orient_bipartite(&generate::complete(5), BipartiteSide::Auto).is_err());
    }

    #[test]
    fn colouring_examples() {
        let k3 = generate::complete(3);
        let o = orient_by_colouring(&k3, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(o.is_acyclic());
        let p = generate::petersen();
        let parts = colouring::exact(&p, 3).unwrap();
        assert!(orient_by_colouring(&p, &parts).unwrap().longest_path().unwrap() <= 2);
        let g = generate::complete_bipartite(2, 3);
        let byc = orient_by_colouring(&g, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        let byb = orient_bipartite(&g, BipartiteSide::A).unwrap();
        assert_eq!(byc.arcs(), byb.arcs());
        assert!(orient_by_colouring(&k3, &[vec![0, 1], vec![2]]).is_err());
    }

    #[test]
    fn forests_examples() {
        let t = generate::random_tree(20, 2);
        let all: Vec<usize> = (0..t.m()).collect();
        assert_eq!(orient_by_forests(&t, &[all]).unwrap().max_out_degree(), 1);
        let k4 = generate::complete(4);
        let parts = forests::forest_peel(&k4);
        assert!(orient_by_forests(&k4, &parts).unwrap().max_out_degree() <= 2);
        let tri = generate::grid_tri(7, 7);
        let parts = forests::forest_peel(&tri);
        assert!(orient_by_forests(&tri, &parts).unwrap().max_out_degree() <= 3);
    }

    #[test]
    fn fvs_examples() {
        let c5 = generate::cycle(5);
        let f = VertexSet::from_iter_in(5, [0]);
        let o = orient_by_fvs(&c5, &f).unwrap();
        assert_eq!(o.out_degree(0), 0);
        // Within V - F every vertex keeps at most one out-arc.
        assert!((1..5).all(|v| o.out_neighbours(v).iter().filter(|&&h| h != 0).count() <= 1));
        assert_eq!(o.out_degree(4), 2);
        let t = generate::random_tree(15, 4);
        assert_eq!(orient_by_fvs(&t, &VertexSet::new(15)).unwrap().arcs(), orient_tree(&t, 0).unwrap().arcs());
        assert!(orient_by_fvs(&generate::complete(4), &VertexSet::from_iter_in(4, [0])).is_err());
    }
}
