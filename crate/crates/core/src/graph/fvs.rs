//! Minimum feedback vertex sets by exhaustive search.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_FVS_N: usize = 30;

/// Whether deleting `f` leaves a forest.
pub fn is_fvs(g: &Graph, f: &VertexSet) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in g.edges() {
        if f.contains(u) || f.contains(v) {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Calls `visit` on each `size`-subset of `pool` in lexicographic order
/// until it returns `true`.
fn first_subset(pool: &[usize], size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..size).collect();
    let mut chosen = vec![0; size];
    if size > pool.len() {
        return false;
    }
    loop {
        for (c, &i) in chosen.iter_mut().zip(&idx) {
            *c = pool[i];
        }
        if visit(&chosen) {
            return true;
        }
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + pool.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A minimum feedback vertex set; among minimum sets, the
/// lexicographically first. Only vertices on some cycle are candidates.
pub fn min_fvs(g: &Graph) -> Result<VertexSet> {
    if g.n() > MAX_FVS_N {
        return Err(Error::SizeLimit { what: "vertices", value: g.n(), limit: MAX_FVS_N });
    }
    // Vertices of degree <= 1 never lie on a cycle; peel them repeatedly.
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let pool: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    for size in 0..=pool.len() {
        let mut found = None;
        first_subset(&pool, size, &mut |s| {
            let f = VertexSet::from_iter_in(g.n(), s.iter().copied());
            if is_fvs(g, &f) {
                found = Some(f);
                true
            } else {
                false
            }
        });
        if let Some(f) = found {
            return Ok(f);
        }
    }
    unreachable!("the whole pool is a feedback vertex set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    /// Oracle: smallest size over all 2^n subsets.
    fn brute_size(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| is_fvs(g, &VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| m >> v & 1 == 1))))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(min_fvs(&generate::random_tree(12, 0)).unwrap().is_empty());
        assert_eq!(min_fvs(&generate::cycle(5)).unwrap().len(), 1);
        assert_eq!(min_fvs(&generate::complete(4)).unwrap().len(), 2);
        assert_eq!(brute_size(&generate::complete(4)), 2);
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in [generate::petersen(), generate::cube(), generate::prism(4), generate::complete_bipartite(3, 3)] {
            let f = min_fvs(&g).unwrap();
            assert!(is_fvs(&g, &f));
            assert_eq!(f.len(), brute_size(&g));
        }
    }
}
