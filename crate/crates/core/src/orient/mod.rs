//! Constructive orientations, each with a guaranteed outdegree shape.
//!
//! Every recipe is reachable by name through [`orient`]. Choices that the
//! constructions leave open are fixed deterministically: tree roots are the
//! smallest vertex id, and otherwise arbitrary edges point from the lower
//! to the higher id.

mod basic;
mod bounded;
mod grid;
mod ktree;
mod subcubic;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

pub use basic::{
    orient_bipartite, orient_by_colouring, orient_by_forests, orient_by_fvs, orient_complete,
    orient_complete_graph, orient_half, orient_tree, orient_unicyclic, BipartiteSide,
};
pub use bounded::{orient_bounded_degree, BoundedDegreeOrientation};
pub use grid::{orient_grid, GridKind};
pub use ktree::orient_ktree;
pub use subcubic::{orient_subcubic, ArcKind, SubcubicOrientation};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{colouring, forests, fvs, generate, Graph};
use crate::orientation::Orientation;

pub const RECIPES: &[&str] = &[
    "tree",
    "half",
    "unicyclic",
    "complete",
    "bipartite",
    "colouring",
    "forests",
    "fvs",
    "ktree",
    "subcubic",
    "bounded-degree",
    "grid-rect",
    "grid-tri",
    "grid-hex",
];

/// Optional inputs for [`orient`]; recipes compute anything left unset.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RecipeParams {
    pub root: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub side: Option<BipartiteSide>,
    pub colouring: Option<Vec<Vec<usize>>>,
    pub forests: Option<Vec<Vec<usize>>>,
    pub fvs: Option<Vec<usize>>,
    pub w: Option<usize>,
    pub h: Option<usize>,
}

/// Builds the named orientation of `g`.
pub fn orient(recipe: &str, g: &Graph, p: &RecipeParams) -> Result<Orientation> {
    match recipe {
        "tree" => orient_tree(g, p.root.unwrap_or(0)),
        "half" => Ok(orient_half(g)),
        "unicyclic" => orient_unicyclic(g),
        "complete" => orient_complete_graph(g),
        "bipartite" => orient_bipartite(g, p.side.unwrap_or(BipartiteSide::Auto)),
        "colouring" => {
            let parts = match &p.colouring {
                Some(parts) => parts.clone(),
                None => colouring::exact(g, colouring::chromatic_number(g)).expect("chromatic number is feasible"),
            };
            orient_by_colouring(g, &parts)
        }
        "forests" => {
            let parts = p.forests.clone().unwrap_or_else(|| forests::forest_peel(g));
            orient_by_forests(g, &parts)
        }
        "fvs" => {
            let f = match &p.fvs {
                Some(vs) => {
                    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                        return Err(Error::InvalidParams(format!("feedback vertex {v} out of range")));
                    }
                    VertexSet::from_iter_in(g.n(), vs.iter().copied())
                }
                None => fvs::min_fvs(g)?,
            };
            orient_by_fvs(g, &f)
        }
        "ktree" => {
            let k = match p.k {
                Some(k) => k,
                None => crate::graph::ktree::infer_k(g).ok_or_else(|| Error::pre("ktree", "not a k-tree for any k"))?,
            };
            orient_ktree(g, k)
        }
        "subcubic" => orient_subcubic(g).map(|s| s.orientation),
        "bounded-degree" => {
            let d = p.d.unwrap_or_else(|| g.max_degree().max(4));
            orient_bounded_degree(g, d).map(|b| b.orientation)
        }
        "grid-rect" | "grid-tri" | "grid-hex" => {
            let kind = match recipe {
                "grid-rect" => GridKind::Rect,
                "grid-tri" => GridKind::Tri,
                _ => GridKind::Hex,
            };
            let (w, h) = match (p.w, p.h) {
                (Some(w), Some(h)) => (w, h),
                _ => return Err(Error::InvalidParams(format!("recipe '{recipe}' needs --w and --h"))),
            };
            let o = orient_grid(kind, w, h)?;
            if o.graph() != g {
                return Err(Error::pre("grid", format!("input is not the {w}x{h} {recipe} patch")));
            }
            Ok(o)
        }
        _ => Err(Error::unknown("recipe", recipe)),
    }
}

/// The graph a grid recipe expects, for callers with no input graph.
pub fn grid_graph(recipe: &str, w: usize, h: usize) -> Option<Graph> {
    match recipe {
        "grid-rect" => Some(generate::grid_rect(w, h)),
        "grid-tri" => Some(generate::grid_tri(w, h)),
        "grid-hex" => Some(generate::grid_hex(w, h)),
        _ => None,
    }
}

/// Orients the listed edges of a forest towards roots: BFS from each root in
/// `roots` first, then from the smallest unvisited vertex. Each edge points
/// from child to parent. Returns `false` if the listed edges contain a cycle.
pub(crate) fn toward_roots(g: &Graph, edge_ids: &[usize], roots: &[usize], head: &mut [usize]) -> bool {
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for &e in edge_ids {
        let (u, v) = g.edge(e);
        inc[u].push((v, e));
        inc[v].push((u, e));
    }
    let mut seen = vec![false; g.n()];
    let mut done = vec![false; g.m()];
    let starts = roots.iter().copied().chain(0..g.n());
    for r in starts {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut q = VecDeque::from([r]);
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
    }
    true
}

pub(crate) fn from_heads(g: &Graph, head: &[usize]) -> Orientation {
    debug_assert!(head.iter().all(|&h| h != usize::MAX));
    Orientation::from_fn(g.clone(), |e, _, _| head[e])
}
