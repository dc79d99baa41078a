//! Plain minimax without memoisation, pruning or move restrictions: every
//! subset of at most `f` unburnt, unprotected vertices is tried, including
//! the empty one. Exponential; only for cross-checking on tiny inputs.

use crate::graph::Graph;

fn value(out: &[u64], f: usize, b: u64, p: u64) -> u32 {
    let n = out.len();
    let spread = |p: u64| (0..n).filter(|&v| b >> v & 1 == 1).fold(0u64, |a, v| a | out[v]) & !(b | p);
    let free: Vec<usize> = (0..n).filter(|&v| (b | p) >> v & 1 == 0).collect();
    let mut best = u32::MAX;
    let mut chosen = Vec::new();
    subsets(&free, f, 0, &mut chosen, &mut |s| {
        let new = spread(p | s);
        let v = if new == 0 { b.count_ones() } else { value(out, f, b | new, p | s) };
        best = best.min(v);
    });
    best
}

fn subsets(pool: &[usize], max: usize, from: usize, chosen: &mut Vec<usize>, emit: &mut impl FnMut(u64)) {
    emit(chosen.iter().fold(0, |a, &v| a | 1 << v));
    if chosen.len() == max {
        return;
    }
    for i in from..pool.len() {
        chosen.push(pool[i]);
        subsets(pool, max, i + 1, chosen, emit);
        chosen.pop();
    }
}

/// Minimum final burned count from `start` on the digraph given by `out`.
pub fn start_value(out: &[u64], f: usize, start: usize) -> u32 {
    value(out, f, 1 << start, 0)
}

/// Maximum over starts of [`start_value`].
pub fn fixed_value(out: &[u64], f: usize) -> u32 {
    (0..out.len()).map(|s| start_value(out, f, s)).max().unwrap_or(0)
}

/// Minimum of [`fixed_value`] over all `2^m` orientations of `g`.
pub fn best_value(g: &Graph, f: usize) -> u32 {
    let m = g.m();
    (0u64..1 << m)
        .map(|code| {
            let mut out = vec![0u64; g.n()];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if code >> e & 1 == 1 {
                    out[u] |= 1 << v;
                } else {
                    out[v] |= 1 << u;
                }
            }
            fixed_value(&out, f)
        })
        .min()
        .unwrap_or(1)
}

/// Classic firefighting: fire spreads along every edge.
pub fn undirected_value(g: &Graph, f: usize, start: usize) -> u32 {
    let mut out = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        out[u] |= 1 << v;
        out[v] |= 1 << u;
    }
    start_value(&out, f, start)
}
