//! Exact optimal play on small instances.
//!
//! [`solve_orientation`] computes the worst-case number of burnt vertices
//! for a fixed orientation under optimal defence, [`solve_best_orientation`]
//! minimises that over every orientation of a graph, and
//! [`solve_undirected`] plays the classic game where fire crosses edges in
//! both directions.

mod best;
mod engine;
pub mod reference;
mod result;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use best::solve_best_orientation;
pub use result::SolveReport;

use crate::error::{Error, Result};
use crate::game::{FireEvent, FireTrace};
use crate::graph::Graph;
use crate::orientation::Orientation;
use engine::Engine;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverConfig {
    pub max_vertices: usize,
    /// Largest edge count accepted by the exhaustive orientation search.
    pub max_edges: usize,
    pub budget: Option<Duration>,
    pub node_budget: Option<u64>,
    /// Worker threads for the orientation search; `None` uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_vertices: 24, max_edges: 21, budget: None, node_budget: None, threads: None }
    }
}

/// Outcome of optimal play.
#[derive(Debug, Clone)]
pub struct GameValue {
    /// Worst case over fire starts of the optimal burned count.
    pub beta: usize,
    /// False when a budget ran out; `beta` is then only an upper bound.
    pub exact: bool,
    pub witness_start: usize,
    pub orientation: Orientation,
    /// Optimal play from `witness_start`.
    pub trace: FireTrace,
    /// Optimal burned count for each start.
    pub per_start: Vec<usize>,
    pub nodes_explored: u64,
    pub wall_ms: u64,
}

fn check_size(n: usize, cfg: &SolverConfig) -> Result<()> {
    let limit = cfg.max_vertices.min(64);
    if n > limit {
        return Err(Error::SizeLimit { what: "vertices", value: n, limit });
    }
    Ok(())
}

fn check_f(f: usize) -> Result<()> {
    if f == 0 {
        return Err(Error::InvalidParams("f must be at least 1".into()));
    }
    Ok(())
}

/// Replays optimal moves from `start` into a trace.
fn optimal_trace(engine: &mut Engine, out: &[u64], f: usize, start: usize, value: u32) -> FireTrace {
    let mut b = 1u64 << start;
    let mut p = 0u64;
    let mut t = 1;
    let mut events = vec![FireEvent::Burn { t: 1, burn: vec![start] }];
    let to_vec = |m: u64| crate::bitset::bits(m).collect::<Vec<usize>>();
    loop {
        let threatened = crate::bitset::bits(b).fold(0u64, |a, v| a | out[v]) & !(b | p);
        if threatened == 0 {
            break;
        }
        let (protect, burn) = if threatened.count_ones() as usize <= f {
            (threatened, 0)
        } else {
            let target = engine.search(b, p, u32::MAX).expect("unbounded engine");
            let mv = engine.best_move(b, p, target).expect("unbounded engine");
            (mv.protect, mv.burn)
        };
        events.push(FireEvent::Protect { t, protect: to_vec(protect) });
        p |= protect;
        if burn == 0 {
            break;
        }
        t += 1;
        b |= burn;
        events.push(FireEvent::Burn { t, burn: to_vec(burn) });
    }
    debug_assert_eq!(b.count_ones(), value);
    FireTrace { start, f, events, burned: b.count_ones() as usize }
}

/// Optimal defence on a fixed orientation. With `start`, only that fire
/// source is considered.
pub fn solve_orientation(o: &Orientation, f: usize, start: Option<usize>, cfg: &SolverConfig) -> Result<GameValue> {
    let clock = Instant::now();
    check_f(f)?;
    check_size(o.n(), cfg)?;
    let n = o.n();
    if n == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    if let Some(s) = start {
        if s >= n {
            return Err(Error::InvalidParams(format!("start {s} out of range 0..{n}")));
        }
    }
    let out = o.out_masks();
    let mut engine = Engine::new(&out, f);
    let starts: Vec<usize> = match start {
        Some(s) => vec![s],
        None => (0..n).collect(),
    };
    let mut per_start = vec![0usize; n];
    for &s in &starts {
        per_start[s] = engine.value(s).expect("unbounded engine") as usize;
    }
    let witness_start = starts.iter().copied().max_by_key(|&s| (per_start[s], std::cmp::Reverse(s))).expect("a start");
    let beta = per_start[witness_start];
    let trace = optimal_trace(&mut engine, &out, f, witness_start, beta as u32);
    if start.is_some() {
        per_start = vec![beta];
    }
    Ok(GameValue {
        beta,
        exact: true,
        witness_start,
        orientation: o.clone(),
        trace,
        per_start,
        nodes_explored: engine.nodes,
        wall_ms: clock.elapsed().as_millis() as u64,
    })
}

/// Classic firefighting from `start`: fire crosses every edge in both
/// directions. Returns the optimal burned count, i.e. `n` minus the
/// maximum number of saved vertices.
pub fn solve_undirected(g: &Graph, f: usize, start: usize, cfg: &SolverConfig) -> Result<usize> {
    check_f(f)?;
    check_size(g.n(), cfg)?;
    if start >= g.n() {
        return Err(Error::InvalidParams(format!("start {start} out of range 0..{}", g.n())));
    }
    let out = g.adjacency_masks();
    let mut engine = Engine::new(&out, f);
    Ok(engine.value(start).expect("unbounded engine") as usize)
}
