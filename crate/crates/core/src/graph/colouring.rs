//! Proper vertex colourings, returned as partitions `(V_1, ..., V_k)`.

use crate::graph::Graph;

/// Converts a colour vector into parts indexed by colour.
pub fn parts_of(colour: &[usize]) -> Vec<Vec<usize>> {
    let k = colour.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut parts = vec![Vec::new(); k];
    for (v, &c) in colour.iter().enumerate() {
        parts[c].push(v);
    }
    parts
}

/// Colour index per vertex for a partition, or `None` if it is not a
/// partition of `0..n`.
pub fn colour_of(n: usize, parts: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut colour = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= n || colour[v] != usize::MAX {
                return None;
            }
            colour[v] = i;
        }
    }
    colour.iter().all(|&c| c != usize::MAX).then_some(colour)
}

pub fn is_proper(g: &Graph, parts: &[Vec<usize>]) -> bool {
    match colour_of(g.n(), parts) {
        Some(c) => g.edges().iter().all(|&(u, v)| c[u] != c[v]),
        None => false,
    }
}

/// Smallest-available-colour in ascending vertex order.
pub fn greedy(g: &Graph) -> Vec<Vec<usize>> {
    let mut colour = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let used: Vec<usize> = g.neighbours(v).map(|w| colour[w]).filter(|&c| c != usize::MAX).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    parts_of(&colour)
}

/// A proper colouring with at most `k` colours found by backtracking, or
/// `None` if none exists. Empty colour classes are dropped.
pub fn exact(g: &Graph, k: usize) -> Option<Vec<Vec<usize>>> {
    fn go(g: &Graph, k: usize, v: usize, colour: &mut [usize], used: usize) -> bool {
        if v == g.n() {
            return true;
        }
        // Symmetry breaking: a vertex may open at most one new colour.
        for c in 0..k.min(used + 1) {
            if g.neighbours(v).all(|w| colour[w] != c) {
                colour[v] = c;
                if go(g, k, v + 1, colour, used.max(c + 1)) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; g.n()];
    go(g, k, 0, &mut colour, 0).then(|| parts_of(&colour))
}

pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n()).find(|&k| exact(g, k).is_some()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = generate::cycle(5);
        let parts = exact(&c5, 3).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(is_proper(&c5, &parts));
        assert!(exact(&c5, 2).is_none());
    }

    #[test]
    fn k4_not_three_colourable() {
        assert!(exact(&generate::complete(4), 3).is_none());
        assert_eq!(chromatic_number(&generate::complete(4)), 4);
    }

    #[test]
    fn greedy_petersen() {
        let p = generate::petersen();
        let parts = greedy(&p);
        assert!(parts.len() <= 4);
        for part in &parts {
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    assert!(!p.has_edge(u, v));
                }
            }
        }
        assert_eq!(chromatic_number(&p), 3);
    }
}
