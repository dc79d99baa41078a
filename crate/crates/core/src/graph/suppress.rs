//! Suppression of degree-2 vertices in a 2-edge-connected subcubic graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The cubic multigraph obtained by replacing every maximal path through
/// degree-2 vertices with a single edge.
#[derive(Debug, Clone)]
pub struct Suppressed {
    /// Cubic multigraph on the degree-3 vertices.
    pub cubic: Graph,
    /// Original vertex id of each cubic vertex (ascending).
    pub vertices: Vec<usize>,
    /// For each cubic edge `(a, b)`, the original vertices from `a` to `b`,
    /// endpoints included.
    pub paths: Vec<Vec<usize>>,
    /// For each cubic edge, the original edge ids along its path, in order.
    pub path_edges: Vec<Vec<usize>>,
}

impl Suppressed {
    /// Internal (degree-2) vertices of the path behind cubic edge `e`.
    pub fn internal(&self, e: usize) -> &[usize] {
        let p = &self.paths[e];
        &p[1..p.len() - 1]
    }

    /// Original edges as `(u, v)` pairs obtained by expanding every path.
    pub fn expand(&self) -> Vec<(usize, usize)> {
        self.paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1]))).collect()
    }
}

pub fn suppress_degree2(x: &Graph) -> Result<Suppressed> {
    const NAME: &str = "suppress_degree2";
    if let Some(v) = (0..x.n()).find(|&v| x.degree(v) != 2 && x.degree(v) != 3) {
        return Err(Error::pre(NAME, format!("vertex {v} has degree {}, expected 2 or 3", x.degree(v))));
    }
    let vertices: Vec<usize> = (0..x.n()).filter(|&v| x.degree(v) == 3).collect();
    if vertices.len() < 2 {
        return Err(Error::pre(NAME, "needs at least two degree-3 vertices"));
    }
    let mut index = vec![usize::MAX; x.n()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut used = vec![false; x.m()];
    let mut cubic_edges = Vec::new();
    let mut paths = Vec::new();
    let mut path_edges = Vec::new();
    for &v in &vertices {
        for &(w, e) in x.incident(v) {
            if used[e] {
                continue;
            }
            used[e] = true;
            let mut path = vec![v];
            let mut edges = vec![e];
            let (mut cur, mut prev) = (w, e);
            while x.degree(cur) == 2 {
                path.push(cur);
                let &(next, f) = x
                    .incident(cur)
                    .iter()
                    .find(|&&(_, f)| f != prev)
                    .expect("degree-2 vertex has a second edge");
                used[f] = true;
                edges.push(f);
                prev = f;
                cur = next;
                if path.len() > x.n() {
                    return Err(Error::pre(NAME, "degree-2 path does not terminate"));
                }
            }
            path.push(cur);
            if cur == v {
                return Err(Error::pre(NAME, format!("path from {v} returns to itself; input has a bridge")));
            }
            cubic_edges.push((index[v], index[cur]));
            paths.push(path);
            path_edges.push(edges);
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(Error::pre(NAME, "input contains a cycle with no degree-3 vertex"));
    }
    let cubic = Graph::multigraph(vertices.len(), cubic_edges)?;
    Ok(Suppressed { cubic, vertices, paths, path_edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn sorted(mut e: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        for p in &mut e {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        e.sort_unstable();
        e
    }

    #[test]
    fn theta_graph() {
        // Degree-3 vertices 0 and 1 joined by paths of length 1, 2 and 3.
        let g = Graph::new(5, vec![(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let s = suppress_degree2(&g).unwrap();
        assert_eq!(s.cubic.n(), 2);
        assert_eq!(s.cubic.m(), 3);
        assert_eq!(sorted(s.expand()), sorted(g.edges().to_vec()));
    }

    #[test]
    fn cubic_input_is_unchanged() {
        let g = generate::complete(4);
        let s = suppress_degree2(&g).unwrap();
        assert_eq!(sorted(s.cubic.edges().to_vec()), sorted(g.edges().to_vec()));
        assert!((0..s.cubic.m()).all(|e| s.internal(e).is_empty()));
    }

    #[test]
    fn subdivided_prism() {
        let p = generate::prism(3);
        let (a, b) = p.edge(0);
        let mut edges: Vec<(usize, usize)> = p.edges()[1..].to_vec();
        edges.push((a, 6));
        edges.push((6, b));
        let g = Graph::new(7, edges).unwrap();
        let s = suppress_degree2(&g).unwrap();
        assert_eq!(s.cubic.m(), 9);
        assert_eq!((0..9).map(|e| s.internal(e).len()).sum::<usize>(), 1);
        assert_eq!(sorted(s.expand()), sorted(g.edges().to_vec()));
    }

    #[test]
    fn rejects_pure_cycle() {
        assert!(suppress_degree2(&generate::cycle(5)).is_err());
    }
}
