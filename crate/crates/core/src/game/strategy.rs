use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use super::FireState;
use crate::error::{Error, Result};
use crate::graph::ktree::{infer_k, ktree_structure};
use crate::graph::metrics::out_distances;
use crate::orient::{orient_bounded_degree, orient_complete_graph, orient_grid, orient_ktree, orient_subcubic, GridKind};
use crate::orientation::Orientation;

pub const STRATEGIES: &[&str] = &[
    "greedy-outdeg",
    "layer",
    "complete-cyclic",
    "ktree-anticipate",
    "subcubic",
    "bipartite",
    "grid-rect",
    "grid-tri",
    "scripted",
];

/// A deterministic defence rule.
///
/// `choose` is called once per time unit with the state after that unit's
/// burns and returns at most `f` unburnt, unprotected vertices. Strategies
/// tied to an orientation family recognise the family on first use and
/// fall back to `greedy-outdeg` when the orientation is not the one they
/// were written for.
pub trait Strategy: Send {
    fn name(&self) -> &str;
    fn choose(&mut self, o: &Orientation, state: &FireState) -> Vec<usize>;
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct StrategyParams {
    /// Clique order for `ktree-anticipate`; inferred from the edge count if absent.
    pub k: Option<usize>,
    /// Per-time protect sets for `scripted`, index 0 being time 1.
    pub script: Option<Vec<Vec<usize>>>,
}

/// Builds a strategy by name. `scripted` takes its list from
/// `params.script`, or inline as `scripted:[[1],[6]]`.
pub fn make_strategy(name: &str, params: &StrategyParams) -> Result<Box<dyn Strategy>> {
    let norm = name.trim().replace('_', "-").to_ascii_lowercase();
    if let Some(list) = norm.strip_prefix("scripted:") {
        let script: Vec<Vec<usize>> = serde_json::from_str(list)
            .map_err(|e| Error::InvalidParams(format!("bad inline script: {e}")))?;
        return Ok(Box::new(Scripted { script }));
    }
    Ok(match norm.as_str() {
        "greedy-outdeg" | "greedy" => Box::new(Greedy),
        "layer" => Box::new(Layer),
        "complete-cyclic" => Box::new(Family::new("complete-cyclic", CompletePlan::build)),
        "ktree-anticipate" => {
            let k = params.k;
            Box::new(Family::new("ktree-anticipate", move |o: &Orientation| KTreePlan::build(o, k)))
        }
        "subcubic" => Box::new(Family::new("subcubic", SubcubicPlan::build)),
        "bipartite" => Box::new(Bipartite),
        "grid-rect" => Box::new(Family::new("grid-rect", |o: &Orientation| GridPlan::build(o, GridKind::Rect))),
        "grid-tri" => Box::new(Family::new("grid-tri", |o: &Orientation| GridPlan::build(o, GridKind::Tri))),
        "scripted" => {
            let script = params
                .script
                .clone()
                .ok_or_else(|| Error::InvalidParams("scripted strategy needs a script".into()))?;
            Box::new(Scripted { script })
        }
        _ => return Err(Error::unknown("strategy", name)),
    })
}

/// Threatened vertices ordered by largest open out-reach, then smallest id.
fn greedy_order(o: &Orientation, state: &FireState) -> Vec<usize> {
    let mut t: Vec<(usize, usize)> = state.threatened(o).into_iter().map(|v| (state.open_reach(o, v), v)).collect();
    t.sort_by_key(|&(r, v)| (Reverse(r), v));
    t.into_iter().map(|(_, v)| v).collect()
}

/// Takes free vertices from `preferred` in order, then tops up to `f` with
/// greedy choices.
fn fill(o: &Orientation, state: &FireState, preferred: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(state.f);
    let free = |v: usize| !state.burnt.contains(v) && !state.protected.contains(v);
    for v in preferred.into_iter().chain(greedy_order(o, state)) {
        if out.len() == state.f {
            break;
        }
        if free(v) && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn same_arcs(a: &Orientation, b: &Orientation) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut x = a.arcs();
    let mut y = b.arcs();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

struct Greedy;

impl Strategy for Greedy {
    fn name(&self) -> &str {
        "greedy-outdeg"
    }
    fn choose(&mut self, o: &Orientation, state: &FireState) -> Vec<usize> {
        fill(o, state, [])
    }
}

/// Protects inside the distance layer `V_t` from the start at time `t`.
struct Layer;

impl Strategy for Layer {
    fn name(&self) -> &str {
        "layer"
    }
    fn choose(&mut self, o: &Orientation, state: &FireState) -> Vec<usize> {
        let dist = out_distances(o, state.start);
        let threatened = state.threatened(o);
        let mut layer: Vec<(bool, usize, usize)> = (0..o.n())
            .filter(|&v| dist[v] == Some(state.time))
            .filter(|&v| !state.burnt.contains(v) && !state.protected.contains(v))
            .map(|v| (!threatened.contains(&v), state.open_reach(o, v), v))
            .collect();
        layer.sort_by_key(|&(far, reach, v)| (far, Reverse(reach), v));
        layer.into_iter().take(state.f).map(|(_, _, v)| v).collect()
    }
}

struct Bipartite;

impl Strategy for Bipartite {
    fn name(&self) -> &str {
        "bipartite"
    }
    fn choose(&mut self, o: &Orientation, state: &FireState) -> Vec<usize> {
        if state.time == 1 {
            let mut outs = o.out_neighbours(state.start).to_vec();
            outs.sort_by_key(|&v| (Reverse(state.open_reach(o, v)), v));
            fill(o, state, outs)
        } else {
            fill(o, state, [])
        }
    }
}

struct Scripted {
    script: Vec<Vec<usize>>,
}

impl Strategy for Scripted {
    fn name(&self) -> &str {
        "scripted"
    }
    fn choose(&mut self, _: &Orientation, state: &FireState) -> Vec<usize> {
        self.script.get(state.time - 1).cloned().unwrap_or_default()
    }
}

/// A family-specific plan: recognised once per orientation.
trait Plan: Send {
    fn preferred(&self, o: &Orientation, state: &FireState) -> Vec<usize>;
}

type Cached = (Vec<(usize, usize)>, Option<Box<dyn Plan>>);

type Builder = Box<dyn Fn(&Orientation) -> Option<Box<dyn Plan>> + Send>;

struct Family {
    name: &'static str,
    build: Builder,
    /// The arcs a plan was built for, and the plan (if the family fits).
    cache: Option<Cached>,
}

impl Family {
    fn new<P: Plan + 'static>(name: &'static str, build: impl Fn(&Orientation) -> Option<P> + Send + 'static) -> Self {
        Family {
            name,
            build: Box::new(move |o| build(o).map(|p| Box::new(p) as Box<dyn Plan>)),
            cache: None,
        }
    }
}

impl Strategy for Family {
    fn name(&self) -> &str {
        self.name
    }
    fn choose(&mut self, o: &Orientation, state: &FireState) -> Vec<usize> {
        let arcs = o.arcs();
        if self.cache.as_ref().is_none_or(|(key, _)| *key != arcs) {
            let plan = (self.build)(o);
            self.cache = Some((arcs, plan));
        }
        match &self.cache.as_ref().expect("cache filled").1 {
            Some(plan) => {
                let pref = plan.preferred(o, state);
                fill(o, state, pref)
            }
            None => fill(o, state, []),
        }
    }
}

/// Complete graphs with the cyclic orientation on `0..n'` (`n'` odd) and,
/// for even `n`, the sink `n - 1`. Vertices are ranked by their cyclic
/// offset from the start; the first two protection rounds take the
/// candidates with the largest offsets.
struct CompletePlan {
    cyc: usize,
}

impl CompletePlan {
    fn build(o: &Orientation) -> Option<Self> {
        let reference = orient_complete_graph(o.graph()).ok()?;
        same_arcs(&reference, o).then_some(CompletePlan { cyc: if o.n() % 2 == 1 { o.n() } else { o.n() - 1 } })
    }
}

impl Plan for CompletePlan {
    fn preferred(&self, o: &Orientation, state: &FireState) -> Vec<usize> {
        let s = state.start;
        if s >= self.cyc || state.time > 2 {
            return Vec::new();
        }
        // The sink sorts last.
        let key = |v: usize| if v >= self.cyc { 0 } else { (v + self.cyc - s) % self.cyc + 1 };
        let mut cand = if state.time == 1 { o.out_neighbours(s).to_vec() } else { state.threatened(o) };
        cand.sort_by_key(|&v| Reverse(key(v)));
        cand
    }
}

/// Central-clique orientations of k-trees.
///
/// With `f >= floor(k/2)` the first round protects the earliest-constructed
/// out-neighbours of the start, so the fire enters only the most recently
/// added members of the parent clique. With fewer firefighters the plan
/// looks ahead to the first unobstructed fire layer that can be fully
/// protected before it would ignite and protects it in advance.
struct KTreePlan {
    k: usize,
    position: Vec<usize>,
}

impl KTreePlan {
    fn build(o: &Orientation, k: Option<usize>) -> Option<Self> {
        let g = o.graph();
        let k = k.or_else(|| infer_k(g))?;
        let reference = orient_ktree(g, k).ok()?;
        if !same_arcs(&reference, o) {
            return None;
        }
        let s = ktree_structure(g, k)?;
        let mut position = vec![0; g.n()];
        for (i, (v, _)) in s.order.iter().enumerate() {
            position[*v] = i + 1;
        }
        Some(KTreePlan { k, position })
    }
}

impl Plan for KTreePlan {
    fn preferred(&self, o: &Orientation, state: &FireState) -> Vec<usize> {
        if state.f >= self.k / 2 {
            if state.time != 1 {
                return Vec::new();
            }
            let mut outs = o.out_neighbours(state.start).to_vec();
            outs.sort_by_key(|&v| (self.position[v], Reverse(o.out_degree(v)), v));
            return outs;
        }
        let dist = out_distances(o, state.start);
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        // Layer j (1-based) burns at time j when nothing is protected.
        let target = (2..=depth + 1).find(|&j| {
            let size = dist.iter().filter(|&&d| d == Some(j - 1)).count();
            (j - 1) * state.f >= size
        });
        match target {
            Some(j) if state.time < j => {
                (0..o.n()).filter(|&v| dist[v] == Some(j - 1)).collect()
            }
            _ => Vec::new(),
        }
    }
}

/// Subcubic (and bounded-degree) constructions: block the outgoing cycle
/// arc of the start at time 1.
struct SubcubicPlan {
    successor: Vec<Option<usize>>,
}

impl SubcubicPlan {
    fn build(o: &Orientation) -> Option<Self> {
        let g = o.graph();
        let n = g.n();
        let delta = g.max_degree();
        let successor: Vec<Option<usize>> = if delta <= 3 {
            let s = orient_subcubic(g).ok()?;
            if !same_arcs(&s.orientation, o) {
                return None;
            }
            (0..n).map(|v| (o.out_degree(v) == 2).then(|| s.cycle_successor(v)).flatten()).collect()
        } else {
            let b = orient_bounded_degree(g, delta).ok()?;
            if !same_arcs(&b.orientation, o) {
                return None;
            }
            let base = &b.base;
            (0..n)
                .map(|v| (base.orientation.out_degree(v) == 2).then(|| base.cycle_successor(v)).flatten())
                .collect()
        };
        Some(SubcubicPlan { successor })
    }
}

impl Plan for SubcubicPlan {
    fn preferred(&self, _: &Orientation, state: &FireState) -> Vec<usize> {
        match (state.time, self.successor[state.start]) {
            (1, Some(v)) => vec![v],
            _ => Vec::new(),
        }
    }
}

/// Grid patches built by `orient_grid`.
///
/// Rectangular: the first round blocks the row arc of the start, after
/// which vertices threatened along a column arc go first. Triangular: the
/// first round blocks the eastern neighbour, after which threatened
/// vertices are taken row by row.
struct GridPlan {
    kind: GridKind,
    w: usize,
}

impl GridPlan {
    fn build(o: &Orientation, kind: GridKind) -> Option<Self> {
        let n = o.n();
        (4..=n / 4)
            .filter(|w| n.is_multiple_of(*w) && n / w >= 4)
            .find(|&w| orient_grid(kind, w, n / w).is_ok_and(|r| same_arcs(&r, o)))
            .map(|w| GridPlan { kind, w })
    }
}

impl Plan for GridPlan {
    fn preferred(&self, o: &Orientation, state: &FireState) -> Vec<usize> {
        let w = self.w;
        let s = state.start;
        match (self.kind, state.time) {
            (GridKind::Rect, 1) => o.out_neighbours(s).iter().copied().filter(|&v| v / w == s / w).collect(),
            (GridKind::Rect, _) => {
                let mut t = state.threatened(o);
                let vertical = |v: usize| o.in_neighbours(v).iter().any(|&u| state.burnt.contains(u) && u % w == v % w);
                t.sort_by_key(|&v| (!vertical(v), v));
                t
            }
            (GridKind::Tri, 1) => o.out_neighbours(s).iter().copied().filter(|&v| v == s + 1 && v / w == s / w).collect(),
            // Ids are y*w + x, so id order is row order.
            (_, _) => state.threatened(o),
        }
    }
}
