use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether one firefighter can always hold the fire to its start vertex
/// under a suitable orientation: a connected graph qualifies exactly when
/// it has at most one cycle.
pub fn classify_b1(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::InvalidGraph("b1 classification needs a connected graph".into()));
    }
    Ok(g.m() <= g.n())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BkVerdict {
    /// Not ruled out by the checks; no conclusion.
    Possible,
    /// Certainly outside the class.
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BkCheck {
    pub k: usize,
    pub density_ok: bool,
    pub degenerate_ok: bool,
    pub degeneracy: usize,
    pub verdict: BkVerdict,
}

/// Necessary conditions for burning at most `k` vertices with one
/// firefighter: every subgraph has at most `k` edges per vertex, and the
/// graph is `2k`-degenerate.
///
/// Density is tested on the whole graph and on each intermediate core of
/// the degeneracy peeling, so `Excluded` is always correct while `Possible`
/// says nothing.
pub fn bk_necessary(g: &Graph, k: usize) -> BkCheck {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let (mut left_n, mut left_m) = (n, g.m());
    let mut density_ok = left_m <= k * left_n;
    let mut degeneracy = 0;
    while left_n > 0 {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)).expect("a live vertex");
        degeneracy = degeneracy.max(deg[v]);
        alive[v] = false;
        left_n -= 1;
        left_m -= deg[v];
        for w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
        density_ok &= left_m <= k * left_n;
    }
    let degenerate_ok = degeneracy <= 2 * k;
    let verdict = if density_ok && degenerate_ok { BkVerdict::Possible } else { BkVerdict::Excluded };
    BkCheck { k, density_ok, degenerate_ok, degeneracy, verdict }
}
