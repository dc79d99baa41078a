//! Named graph families, deterministic given their parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FAMILIES: &[&str] = &[
    "complete",
    "complete-bipartite",
    "path",
    "cycle",
    "star",
    "path-power",
    "petersen",
    "cube",
    "prism",
    "k33",
    "grid-rect",
    "grid-tri",
    "grid-hex",
    "random-tree",
    "random-ktree",
    "random-regular",
];

/// Parameters accepted by [`generate`]; each family reads the ones it needs.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub k: Option<usize>,
    pub w: Option<usize>,
    pub h: Option<usize>,
    pub seed: u64,
}

fn need(value: Option<usize>, name: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParams(format!("family '{family}' needs --{name}")))
}

fn at_least(value: usize, min: usize, name: &str, family: &str) -> Result<usize> {
    if value < min {
        return Err(Error::InvalidParams(format!(
            "family '{family}' needs {name} >= {min}, got {value}"
        )));
    }
    Ok(value)
}

pub fn generate(family: &str, p: &FamilyParams) -> Result<Graph> {
    let fam = family.replace('_', "-");
    let f = fam.as_str();
    let n = || need(p.n, "n", f);
    let k = || need(p.k, "k", f);
    let wh = || -> Result<(usize, usize)> {
        let w = at_least(need(p.w, "w", f)?, 2, "w", f)?;
        let h = at_least(need(p.h, "h", f)?, 2, "h", f)?;
        Ok((w, h))
    };
    Ok(match f {
        "complete" => complete(at_least(n()?, 1, "n", f)?),
        "complete-bipartite" => complete_bipartite(
            at_least(need(p.p, "p", f)?, 1, "p", f)?,
            at_least(need(p.q, "q", f)?, 1, "q", f)?,
        ),
        "path" => path(at_least(n()?, 1, "n", f)?),
        "cycle" => cycle(at_least(n()?, 3, "n", f)?),
        "star" => star(at_least(n()?, 1, "n", f)?),
        "path-power" => path_power(at_least(n()?, 1, "n", f)?, at_least(k()?, 1, "k", f)?),
        "petersen" => petersen(),
        "cube" => cube(),
        "prism" => prism(at_least(n()?, 3, "n", f)?),
        "k33" => complete_bipartite(3, 3),
        "grid-rect" => {
            let (w, h) = wh()?;
            grid_rect(w, h)
        }
        "grid-tri" => {
            let (w, h) = wh()?;
            grid_tri(w, h)
        }
        "grid-hex" => {
            let (w, h) = wh()?;
            grid_hex(w, h)
        }
        "random-tree" => random_tree(at_least(n()?, 1, "n", f)?, p.seed),
        "random-ktree" => {
            let k = at_least(k()?, 1, "k", f)?;
            random_ktree(at_least(n()?, k + 1, "n", f)?, k, p.seed)
        }
        "random-regular" => random_regular(n()?, k()?, p.seed)?,
        _ => return Err(Error::unknown("family", family)),
    })
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("simple")
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::with_capacity(p * q);
    for u in 0..p {
        for v in p..p + q {
            edges.push((u, v));
        }
    }
    Graph::new(p + q, edges).expect("simple")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect()).expect("simple")
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()).expect("simple")
}

/// The `k`-th power of the path on `n` vertices.
pub fn path_power(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n.min(u + k + 1) {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("simple")
}

/// Outer cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, edges).expect("simple")
}

/// The 3-dimensional hypercube.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(8, edges).expect("simple")
}

/// Two `n`-cycles `0..n` and `n..2n` joined by spokes `i -- i+n`.
pub fn prism(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 0..n {
        edges.push((n + i, n + (i + 1) % n));
    }
    for i in 0..n {
        edges.push((i, n + i));
    }
    Graph::new(2 * n, edges).expect("simple")
}

/// Grid vertex id for column `x`, row `y`.
pub fn grid_id(w: usize, x: usize, y: usize) -> usize {
    y * w + x
}

/// Rectangular `w x h` patch.
pub fn grid_rect(w: usize, h: usize) -> Graph {
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((grid_id(w, x, y), grid_id(w, x + 1, y)));
            }
            if y + 1 < h {
                edges.push((grid_id(w, x, y), grid_id(w, x, y + 1)));
            }
        }
    }
    Graph::new(w * h, edges).expect("simple")
}

/// Triangular patch in offset coordinates: rows are horizontal chains, and
/// a vertex `(x, y)` on an even row is also adjacent to `(x, y±1)` and
/// `(x-1, y±1)`.
pub fn grid_tri(w: usize, h: usize) -> Graph {
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((grid_id(w, x, y), grid_id(w, x + 1, y)));
            }
            if y + 1 < h {
                edges.push((grid_id(w, x, y), grid_id(w, x, y + 1)));
                // Diagonal towards the next row.
                if y % 2 == 0 {
                    if x >= 1 {
                        edges.push((grid_id(w, x, y), grid_id(w, x - 1, y + 1)));
                    }
                } else if x + 1 < w {
                    edges.push((grid_id(w, x, y), grid_id(w, x + 1, y + 1)));
                }
            }
        }
    }
    Graph::new(w * h, edges).expect("simple")
}

/// Hexagonal patch drawn as a brick wall: full rows, with a vertical edge
/// from `(x, y)` to `(x, y+1)` exactly when `x + y` is even.
pub fn grid_hex(w: usize, h: usize) -> Graph {
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((grid_id(w, x, y), grid_id(w, x + 1, y)));
            }
            if y + 1 < h && (x + y) % 2 == 0 {
                edges.push((grid_id(w, x, y), grid_id(w, x, y + 1)));
            }
        }
    }
    Graph::new(w * h, edges).expect("simple")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree: vertex `v` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
    Graph::new(n, edges).expect("simple")
}

/// Random `k`-tree: start from `K_{k+1}` on `0..=k`, then attach each new
/// vertex to a uniformly chosen existing `k`-clique.
pub fn random_ktree(n: usize, k: usize, seed: u64) -> Graph {
    assert!(n > k);
    let mut r = rng(seed);
    let mut edges = complete(k + 1).edges().to_vec();
    let root: Vec<usize> = (0..=k).collect();
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| root.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let base = cliques[r.gen_range(0..cliques.len())].clone();
        for &u in &base {
            edges.push((u, v));
        }
        for skip in 0..k {
            let mut c: Vec<usize> = base.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, u)| u).collect();
            c.push(v);
            cliques.push(c);
        }
    }
    Graph::new(n, edges).expect("simple")
}

/// Uniform-ish random connected `k`-regular simple graph via the pairing
/// model with rejection.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n || (n * k) % 2 == 1 || (k < 2 && n > 2) {
        return Err(Error::InvalidParams(format!(
            "no connected {k}-regular graph on {n} vertices"
        )));
    }
    let mut r = rng(seed);
    for _ in 0..100_000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        points.shuffle(&mut r);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
        if let Ok(g) = Graph::new(n, edges) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(Error::InvalidParams(format!(
        "failed to sample a connected {k}-regular graph on {n} vertices"
    )))
}
