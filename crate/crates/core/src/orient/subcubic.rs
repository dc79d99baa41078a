use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::bridges::bridges;
use crate::graph::matching::perfect_matching;
use crate::graph::suppress::suppress_degree2;
use crate::graph::Graph;
use crate::orientation::Orientation;

/// How an arc arose in the subcubic construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcKind {
    /// Part of a directed cycle (a pure-cycle component or a 2-factor cycle).
    Cycle,
    /// Part of an expanded perfect-matching edge.
    Path,
    /// A bridge, oriented towards the root of the bridge tree.
    Bridge,
}

#[derive(Debug, Clone)]
pub struct SubcubicOrientation {
    pub orientation: Orientation,
    /// Kind of each edge's arc, indexed by edge id.
    pub kinds: Vec<ArcKind>,
}

impl SubcubicOrientation {
    /// The out-neighbour of `v` along a cycle arc, if any.
    pub fn cycle_successor(&self, v: usize) -> Option<usize> {
        let g = self.orientation.graph();
        g.incident(v).iter().find_map(|&(_, e)| {
            let (t, h) = self.orientation.arc(e);
            (t == v && self.kinds[e] == ArcKind::Cycle).then_some(h)
        })
    }
}

/// Orientation of a graph with maximum degree at most 3 in which every
/// vertex has outdegree at most 2, and a vertex of outdegree 2 has one
/// outgoing and one incoming cycle arc.
///
/// Bridges point towards the bridge-tree root (the 2-edge-connected
/// component holding the smallest vertex of each connected component).
/// Pure cycles are oriented cyclically. Other components are reduced to a
/// cubic multigraph, split into a perfect matching and a 2-factor; the
/// 2-factor cycles are oriented cyclically and matching paths run from
/// their lower to their higher endpoint. If the component owns the tail of
/// its outgoing bridge, the reduced edge carrying that tail is kept out of
/// the matching.
pub fn orient_subcubic(g: &Graph) -> Result<SubcubicOrientation> {
    if g.max_degree() > 3 {
        return Err(Error::pre("subcubic", format!("maximum degree {} exceeds 3", g.max_degree())));
    }
    let dec = bridges(g);
    let mut head = vec![usize::MAX; g.m()];
    let mut kinds = vec![ArcKind::Cycle; g.m()];

    // Bridge tree: components as nodes, BFS from the lowest-indexed component.
    let nc = dec.components.len();
    let mut tree: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nc];
    for &e in &dec.bridges {
        let (u, v) = g.edge(e);
        let (cu, cv) = (dec.component[u], dec.component[v]);
        tree[cu].push((cv, e));
        tree[cv].push((cu, e));
    }
    let mut out_tail: Vec<Option<usize>> = vec![None; nc];
    let mut seen = vec![false; nc];
    for root in 0..nc {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(c) = q.pop_front() {
            for &(d, e) in &tree[c] {
                if seen[d] {
                    continue;
                }
                seen[d] = true;
                // Child component d points to parent c.
                let (u, v) = g.edge(e);
                let (tail, hd) = if dec.component[u] == d { (u, v) } else { (v, u) };
                head[e] = hd;
                kinds[e] = ArcKind::Bridge;
                out_tail[d] = Some(tail);
                q.push_back(d);
            }
        }
    }

    for (ci, members) in dec.components.iter().enumerate() {
        if members.len() == 1 {
            continue;
        }
        let keep = VertexSet::from_iter_in(g.n(), members.iter().copied());
        let (x, map) = g.induced(&keep);
        let edge_of = |a: usize, b: usize, used: &[bool]| -> usize {
            // Original edge id between map[a] and map[b] not yet assigned.
            g.incident(map[a])
                .iter()
                .find(|&&(w, e)| w == map[b] && !used[e])
                .map(|&(_, e)| e)
                .expect("induced edge exists")
        };
        let mut assigned = vec![false; g.m()];
        for e in 0..g.m() {
            assigned[e] = head[e] != usize::MAX;
        }
        let mut set_arc = |a: usize, b: usize, kind: ArcKind, assigned: &mut Vec<bool>| {
            let e = edge_of(a, b, assigned);
            assigned[e] = true;
            head[e] = map[b];
            kinds[e] = kind;
        };

        if (0..x.n()).all(|v| x.degree(v) == 2) {
            // Pure cycle: walk from the smallest vertex towards its smaller neighbour.
            let start = 0;
            let mut prev = start;
            let mut cur = x.neighbours(start).min().expect("cycle vertex has neighbours");
            set_arc(start, cur, ArcKind::Cycle, &mut assigned);
            while cur != start {
                let next = x
                    .incident(cur)
                    .iter()
                    .map(|&(w, _)| w)
                    .find(|&w| w != prev)
                    .expect("cycle continues");
                set_arc(cur, next, ArcKind::Cycle, &mut assigned);
                prev = cur;
                cur = next;
            }
            continue;
        }

        let s = suppress_degree2(&x)?;
        let forced = out_tail[ci].and_then(|b| {
            let local = map.binary_search(&b).expect("tail belongs to component");
            let carrier = (0..s.cubic.m()).find(|&e| s.internal(e).contains(&local))?;
            let (c, _) = s.cubic.edge(carrier);
            s.cubic.incident(c).iter().map(|&(_, f)| f).filter(|&f| f != carrier).min()
        });
        let matching = perfect_matching(&s.cubic, forced).ok_or_else(|| {
            Error::pre("subcubic", "reduced cubic multigraph has no perfect matching")
        })?;
        let in_matching = {
            let mut v = vec![false; s.cubic.m()];
            for &e in &matching {
                v[e] = true;
            }
            v
        };

        // Matching edges: expanded path from the lower to the higher endpoint.
        for &e in &matching {
            let path = &s.paths[e];
            let forward = map[path[0]] < map[*path.last().unwrap()];
            let mut p = path.clone();
            if !forward {
                p.reverse();
            }
            for w in p.windows(2) {
                set_arc(w[0], w[1], ArcKind::Path, &mut assigned);
            }
        }

        // 2-factor: walk each cycle from its smallest cubic vertex.
        let mut used = vec![false; s.cubic.m()];
        for start in 0..s.cubic.n() {
            let first = s
                .cubic
                .incident(start)
                .iter()
                .filter(|&&(_, e)| !in_matching[e] && !used[e])
                .map(|&(_, e)| e)
                .min();
            let Some(mut e) = first else { continue };
            let mut cur = start;
            loop {
                used[e] = true;
                let (a, b) = s.cubic.edge(e);
                let next = if a == cur { b } else { a };
                let mut p = s.paths[e].clone();
                if a != cur {
                    p.reverse();
                }
                for w in p.windows(2) {
                    set_arc(w[0], w[1], ArcKind::Cycle, &mut assigned);
                }
                cur = next;
                match s.cubic.incident(cur).iter().find(|&&(_, f)| !in_matching[f] && !used[f]) {
                    Some(&(_, f)) => e = f,
                    None => break,
                }
            }
        }
    }

    let orientation = Orientation::from_fn(g.clone(), |e, _, _| head[e]);
    Ok(SubcubicOrientation { orientation, kinds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn audit(g: &Graph) {
        let s = orient_subcubic(g).unwrap();
        let o = &s.orientation;
        assert_eq!(o.out_degrees().iter().sum::<usize>(), g.m());
        for v in 0..g.n() {
            let d = o.out_degree(v);
            assert!(d <= 2, "vertex {v} outdegree {d}");
            if d == 2 {
                let mut cyc_out = 0;
                let mut cyc_in = 0;
                for &(_, e) in g.incident(v) {
                    if s.kinds[e] == ArcKind::Cycle {
                        if o.arc(e).0 == v {
                            cyc_out += 1;
                        } else {
                            cyc_in += 1;
                        }
                    }
                }
                assert_eq!((cyc_out, cyc_in), (1, 1), "vertex {v}");
            }
        }
        // Cycle arcs form vertex-disjoint directed cycles: in = out = 1 where present.
        for v in 0..g.n() {
            let (mut i, mut out) = (0, 0);
            for &(_, e) in g.incident(v) {
                if s.kinds[e] == ArcKind::Cycle {
                    if o.arc(e).0 == v {
                        out += 1
                    } else {
                        i += 1
                    }
                }
            }
            assert_eq!(i, out);
            assert!(out <= 1);
            // Path arcs: at most one in and one out.
            let pout = g.incident(v).iter().filter(|&&(_, e)| s.kinds[e] == ArcKind::Path && o.arc(e).0 == v).count();
            let pin = g.incident(v).iter().filter(|&&(_, e)| s.kinds[e] == ArcKind::Path && o.arc(e).1 == v).count();
            assert!(pout <= 1 && pin <= 1);
        }
    }

    #[test]
    fn named_graphs() {
        for g in [
            generate::complete(4),
            generate::petersen(),
            generate::cube(),
            generate::prism(3),
            generate::complete_bipartite(3, 3),
            generate::cycle(7),
            generate::grid_hex(8, 8),
            Graph::new(15, (1..15).map(|v| ((v - 1) / 2, v)).collect()).unwrap(),
            generate::path(5),
        ] {
            audit(&g);
        }
    }

    #[test]
    fn bridged_cubic_pieces() {
        // Two K4s with one subdivided edge each, joined through the
        // subdivision vertices by a bridge.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
        edges.extend([(2, 8), (8, 3)]);
        edges.extend([(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 9), (9, 7)]);
        edges.push((8, 9));
        let g = Graph::new(10, edges).unwrap();
        audit(&g);
        let s = orient_subcubic(&g).unwrap();
        let bridge = g.edge_id(8, 9).unwrap();
        assert_eq!(s.kinds[bridge], ArcKind::Bridge);
        assert_eq!(s.orientation.arc(bridge), (9, 8));
    }

    #[test]
    fn random_subcubic() {
        for seed in 0..30 {
            let g = generate::random_regular(12, 3, seed).unwrap();
            audit(&g);
        }
    }

    #[test]
    fn pure_cycle() {
        let s = orient_subcubic(&generate::cycle(7)).unwrap();
        assert!(s.orientation.out_degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn rejects_degree_four() {
        assert!(orient_subcubic(&generate::complete(5)).is_err());
    }
}
