use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A direction for every edge of a graph.
///
/// `forward[e]` means edge `e = (u, v)` of the underlying graph is the arc
/// `u -> v`; otherwise it is `v -> u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    graph: Arc<Graph>,
    forward: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Orientation {
    pub fn new(graph: impl Into<Arc<Graph>>, forward: Vec<bool>) -> Result<Orientation> {
        let graph = graph.into();
        if forward.len() != graph.m() {
            return Err(Error::InvalidGraph(format!(
                "orientation has {} directions for {} edges",
                forward.len(),
                graph.m()
            )));
        }
        let mut out = vec![Vec::new(); graph.n()];
        let mut inn = vec![Vec::new(); graph.n()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let (t, h) = if forward[e] { (u, v) } else { (v, u) };
            out[t].push(h);
            inn[h].push(t);
        }
        Ok(Orientation { graph, forward, out, inn })
    }

    /// Orients every edge from its lower to its higher endpoint.
    pub fn low_to_high(graph: impl Into<Arc<Graph>>) -> Orientation {
        let graph = graph.into();
        let forward = graph.edges().iter().map(|&(u, v)| u < v).collect();
        Self::new(graph, forward).expect("lengths agree")
    }

    /// Orients edge `e = (u, v)` toward `head(e, u, v)`.
    pub fn from_fn(
        graph: impl Into<Arc<Graph>>,
        mut head: impl FnMut(usize, usize, usize) -> usize,
    ) -> Orientation {
        let graph = graph.into();
        let forward = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| head(e, u, v) == v)
            .collect();
        Self::new(graph, forward).expect("lengths agree")
    }

    /// Matches a list of arcs to the edges of `graph`, one arc per edge.
    pub fn from_arcs(graph: impl Into<Arc<Graph>>, arcs: &[(usize, usize)]) -> Result<Orientation> {
        let graph = graph.into();
        if arcs.len() != graph.m() {
            return Err(Error::InvalidGraph(format!(
                "{} arcs given for {} edges",
                arcs.len(),
                graph.m()
            )));
        }
        let mut slots: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            slots.entry((u.min(v), u.max(v))).or_default().push(e);
        }
        for ids in slots.values_mut() {
            ids.reverse();
        }
        let mut forward = vec![false; graph.m()];
        for &(t, h) in arcs {
            let e = slots
                .get_mut(&(t.min(h), t.max(h)))
                .and_then(|ids| ids.pop())
                .ok_or_else(|| Error::InvalidGraph(format!("arc ({t},{h}) matches no remaining edge")))?;
            forward[e] = graph.edge(e).0 == t;
        }
        Self::new(graph, forward)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        self.graph.clone()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// The arc `(tail, head)` carried by edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edge(e);
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Arcs in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.graph.m()).map(|e| self.arc(e)).collect()
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.out.iter().map(Vec::len).collect()
    }

    /// Out-neighbourhood bitmasks; requires `n <= 64`.
    pub fn out_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "out masks need at most 64 vertices");
        self.out
            .iter()
            .map(|hs| hs.iter().fold(0u64, |m, &h| m | 1 << h))
            .collect()
    }

    /// A topological order if the digraph is acyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &h in &self.out[v] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    stack.push(h);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Number of arcs on a longest directed path, if acyclic.
    pub fn longest_path(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut len = vec![0usize; self.n()];
        for &v in order.iter().rev() {
            len[v] = self.out[v].iter().map(|&h| len[h] + 1).max().unwrap_or(0);
        }
        Some(len.into_iter().max().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn handshake() {
        let o = Orientation::low_to_high(triangle());
        let total: usize = o.out_degrees().iter().sum();
        assert_eq!(total, 3);
        for v in 0..3 {
            assert_eq!(o.out_degree(v) + o.in_degree(v), o.graph().degree(v));
        }
        assert_eq!(o.longest_path(), Some(2));
    }

    #[test]
    fn from_arcs_matches_edges() {
        let o = Orientation::from_arcs(triangle(), &[(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(o.arcs(), vec![(1, 0), (2, 1), (0, 2)]);
        assert!(!o.is_acyclic());
        assert!(Orientation::from_arcs(triangle(), &[(1, 0), (1, 0), (0, 2)]).is_err());
    }
}
