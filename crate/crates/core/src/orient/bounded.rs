use super::subcubic::{orient_subcubic, SubcubicOrientation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;

#[derive(Debug, Clone)]
pub struct BoundedDegreeOrientation {
    pub orientation: Orientation,
    /// Extracted sink layers, outermost (degree `d`) first. Every edge from a
    /// layer vertex to a vertex of a later layer or the base points into the
    /// layer vertex.
    pub layers: Vec<Vec<usize>>,
    /// The subcubic orientation of the base graph (same vertex ids, edges
    /// not touching any layer).
    pub base: SubcubicOrientation,
    /// Edge id in `g` of each base edge.
    pub base_edges: Vec<usize>,
}

/// For maximum degree `d >= 4`: scan vertices in ascending id, moving every
/// vertex that still has degree `d` in the remaining graph into a sink
/// layer; recurse with `d - 1` down to the subcubic construction.
pub fn orient_bounded_degree(g: &Graph, d: usize) -> Result<BoundedDegreeOrientation> {
    if d < 4 {
        return Err(Error::InvalidParams(format!("bounded-degree recipe needs d >= 4, got {d}")));
    }
    if g.max_degree() > d {
        return Err(Error::pre("bounded-degree", format!("maximum degree {} exceeds {d}", g.max_degree())));
    }
    let n = g.n();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut head = vec![usize::MAX; g.m()];
    let mut layers = Vec::new();
    for level in (4..=d).rev() {
        let mut layer = Vec::new();
        for v in 0..n {
            if !removed[v] && deg[v] == level {
                removed[v] = true;
                layer.push(v);
                for &(w, e) in g.incident(v) {
                    if !removed[w] {
                        deg[w] -= 1;
                        head[e] = v;
                    }
                }
            }
        }
        layers.push(layer);
    }
    let base_edges: Vec<usize> = (0..g.m()).filter(|&e| head[e] == usize::MAX).collect();
    let base_graph = Graph::new(n, base_edges.iter().map(|&e| g.edge(e)).collect())?;
    let base = orient_subcubic(&base_graph)?;
    for (i, &e) in base_edges.iter().enumerate() {
        head[e] = base.orientation.arc(i).1;
    }
    let orientation = Orientation::from_fn(g.clone(), |e, _, _| head[e]);
    Ok(BoundedDegreeOrientation { orientation, layers, base, base_edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn audit(g: &Graph, d: usize) {
        let b = orient_bounded_degree(g, d).unwrap();
        let o = &b.orientation;
        let mut layer_of = vec![usize::MAX; g.n()];
        for (i, l) in b.layers.iter().enumerate() {
            for &v in l {
                layer_of[v] = i;
            }
        }
        for (t, h) in o.arcs() {
            // An arc leaving a layer vertex may only go to an earlier layer.
            if layer_of[t] != usize::MAX {
                assert!(layer_of[h] < layer_of[t], "arc {t}->{h}");
            }
        }
        for l in &b.layers {
            for (i, &u) in l.iter().enumerate() {
                assert!(l[i + 1..].iter().all(|&v| !g.has_edge(u, v)), "layer not independent");
            }
        }
        assert!(b.base.orientation.max_out_degree() <= 2);
    }

    #[test]
    fn k5_degree_four() {
        let g = generate::complete(5);
        let b = orient_bounded_degree(&g, 4).unwrap();
        assert!(!b.layers[0].is_empty());
        for &x in &b.layers[0] {
            assert_eq!(b.orientation.in_degree(x), g.degree(x));
        }
        audit(&g, 4);
    }

    #[test]
    fn random_regular_graphs() {
        for seed in 0..10 {
            audit(&generate::random_regular(12, 4, seed).unwrap(), 4);
            audit(&generate::random_regular(12, 5, seed).unwrap(), 5);
            audit(&generate::random_regular(14, 6, seed).unwrap(), 6);
        }
        audit(&generate::grid_tri(7, 7), 6);
    }

    #[test]
    fn rejects_large_degree() {
        assert!(orient_bounded_degree(&generate::complete(6), 4).is_err());
    }
}
