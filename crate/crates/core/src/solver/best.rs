use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::engine::{Engine, Limits};
use super::{check_f, check_size, solve_orientation, GameValue, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orient::orient_half;
use crate::orientation::Orientation;

/// Edges fixed by the parallel split; each prefix is one task.
const SPLIT_DEPTH: usize = 10;

struct Shared {
    f: usize,
    /// `(low, high)` endpoints of each edge.
    ends: Vec<(usize, usize)>,
    floor: u32,
    incumbent: AtomicU32,
    best: Mutex<Option<(u32, u64)>>,
    nodes: AtomicU64,
    done: AtomicBool,
    budget_hit: AtomicBool,
    deadline: Option<Instant>,
    node_cap: Option<u64>,
}

/// Partial orientation: the first `depth` edges are fixed.
#[derive(Clone)]
struct Partial {
    depth: usize,
    /// Bit `m - 1 - e` holds the choice for edge `e`, so numeric order is
    /// enumeration order.
    code: u64,
    out: Vec<u64>,
    deg: Vec<u32>,
    max_deg: u32,
}

impl Shared {
    fn m(&self) -> usize {
        self.ends.len()
    }

    fn prunable(&self, max_deg: u32) -> bool {
        // Starting at a vertex of largest outdegree, at most f of its
        // out-neighbours can be saved.
        1 + max_deg.saturating_sub(self.f as u32) >= self.incumbent.load(Ordering::Relaxed)
    }

    fn assign(&self, p: &Partial, bit: u64) -> Partial {
        let e = p.depth;
        let (lo, hi) = self.ends[e];
        let (t, h) = if bit == 0 { (lo, hi) } else { (hi, lo) };
        let mut q = p.clone();
        q.depth += 1;
        q.code |= bit << (self.m() - 1 - e);
        q.out[t] |= 1 << h;
        q.deg[t] += 1;
        q.max_deg = q.max_deg.max(q.deg[t]);
        q
    }

    fn halted(&self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.budget_hit.store(true, Ordering::Relaxed);
        }
        self.done.load(Ordering::Relaxed) || self.budget_hit.load(Ordering::Relaxed)
    }

    fn dfs(&self, p: Partial) {
        if self.halted() || self.prunable(p.max_deg) {
            return;
        }
        if p.depth == self.m() {
            self.evaluate(&p);
            return;
        }
        for bit in [0, 1] {
            self.dfs(self.assign(&p, bit));
        }
    }

    /// Worst start value of a complete orientation, abandoning it as soon
    /// as some start reaches the incumbent.
    fn evaluate(&self, p: &Partial) {
        let cap = self.incumbent.load(Ordering::Relaxed);
        let node_cap = self.node_cap.map(|c| c.saturating_sub(self.nodes.load(Ordering::Relaxed)));
        let limits = Limits { deadline: self.deadline, node_cap, stop: &self.budget_hit };
        let mut engine = Engine::with_limits(&p.out, self.f, limits);
        let mut starts: Vec<usize> = (0..p.out.len()).collect();
        starts.sort_by_key(|&v| (std::cmp::Reverse(p.deg[v]), v));
        let mut worst = 0;
        for s in starts {
            match engine.search(1 << s, 0, cap) {
                Ok(v) if v >= cap => {
                    worst = cap;
                    break;
                }
                Ok(v) => worst = worst.max(v),
                Err(_) => {
                    self.nodes.fetch_add(engine.nodes, Ordering::Relaxed);
                    return;
                }
            }
        }
        let total = self.nodes.fetch_add(engine.nodes, Ordering::Relaxed) + engine.nodes;
        if self.node_cap.is_some_and(|c| total >= c) {
            self.budget_hit.store(true, Ordering::Relaxed);
        }
        if worst < cap {
            let mut best = self.best.lock().expect("no poisoned lock");
            if best.is_none_or(|b| (worst, p.code) < b) {
                *best = Some((worst, p.code));
            }
            self.incumbent.fetch_min(worst, Ordering::Relaxed);
            if worst <= self.floor {
                self.done.store(true, Ordering::Relaxed);
            }
        }
    }
}

fn orientation_from_code(g: &Graph, ends: &[(usize, usize)], code: u64) -> Orientation {
    let m = ends.len();
    Orientation::from_fn(g.clone(), |e, _, _| {
        let (lo, hi) = ends[e];
        if code >> (m - 1 - e) & 1 == 0 {
            hi
        } else {
            lo
        }
    })
}

/// Smallest worst-case burned count over all orientations of `g`.
///
/// Orientations are enumerated in edge order, choosing for each edge the
/// arc from its lower to its higher endpoint first. A branch is cut once
/// its largest outdegree alone forces the incumbent, and the search stops
/// at the floor `ceil(m/n)` (for `f = 1`; `1` otherwise). Run on one
/// thread, the witness is the first optimal orientation in that order.
pub fn solve_best_orientation(g: &Graph, f: usize, cfg: &SolverConfig) -> Result<GameValue> {
    let clock = Instant::now();
    check_f(f)?;
    check_size(g.n(), cfg)?;
    let (n, m) = (g.n(), g.m());
    if n == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    if m > cfg.max_edges.min(63) {
        return Err(Error::SizeLimit { what: "edges", value: m, limit: cfg.max_edges.min(63) });
    }
    let half = orient_half(g);
    let seed = solve_orientation(&half, f, None, cfg)?;
    let floor = if f == 1 { m.div_ceil(n).max(1) as u32 } else { 1 };
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let shared = Shared {
        f,
        ends,
        floor,
        incumbent: AtomicU32::new(seed.beta as u32 + 1),
        best: Mutex::new(None),
        nodes: AtomicU64::new(seed.nodes_explored),
        done: AtomicBool::new(false),
        budget_hit: AtomicBool::new(false),
        deadline: cfg.budget.map(|d| clock + d),
        node_cap: cfg.node_budget,
    };

    let root = Partial { depth: 0, code: 0, out: vec![0; n], deg: vec![0; n], max_deg: 0 };
    let mut tasks = vec![root];
    for _ in 0..SPLIT_DEPTH.min(m) {
        tasks = tasks.iter().flat_map(|p| [shared.assign(p, 0), shared.assign(p, 1)]).collect();
    }
    match cfg.threads {
        Some(1) => tasks.into_iter().for_each(|p| shared.dfs(p)),
        None => tasks.into_par_iter().for_each(|p| shared.dfs(p)),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
            pool.install(|| tasks.into_par_iter().for_each(|p| shared.dfs(p)));
        }
    }

    let exact = !shared.budget_hit.load(Ordering::Relaxed);
    let found = *shared.best.lock().expect("no poisoned lock");
    let witness = match found {
        Some((_, code)) => orientation_from_code(g, &shared.ends, code),
        None => half,
    };
    let mut value = solve_orientation(&witness, f, None, cfg)?;
    if let Some((v, _)) = found {
        debug_assert_eq!(v as usize, value.beta);
    }
    value.exact = exact;
    value.nodes_explored += shared.nodes.load(Ordering::Relaxed);
    value.wall_ms = clock.elapsed().as_millis() as u64;
    Ok(value)
}
