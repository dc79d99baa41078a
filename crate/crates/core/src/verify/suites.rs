use std::fmt;

use num_bigint::BigInt;

use super::{Recorder, VerifyOptions};
use crate::bounds::formulas::{self, int, ratio};
use crate::bounds::{self, BoundHints, LadderSeed};
use crate::error::Result;
use crate::game::{make_strategy, simulate, StrategyParams};
use crate::graph::{enumerate, generate, Graph};
use crate::orient::{orient_bounded_degree, orient_grid, orient_ktree, orient_subcubic, GridKind};
use crate::orientation::Orientation;
use crate::solver::{reference, solve_best_orientation, solve_orientation, GameValue, SolverConfig};

/// What is claimed about the solved value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Exactly(usize),
    AtMost(usize),
    AtLeast(usize),
}

impl Expect {
    pub fn holds(self, v: usize) -> bool {
        match self {
            Expect::Exactly(e) => v == e,
            Expect::AtMost(e) => v <= e,
            Expect::AtLeast(e) => v >= e,
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Exactly(e) => write!(f, "beta = {e}"),
            Expect::AtMost(e) => write!(f, "beta <= {e}"),
            Expect::AtLeast(e) => write!(f, "beta >= {e}"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum InstanceKind {
    /// Minimum over all orientations.
    Best,
    /// One constructed orientation.
    Fixed(Orientation),
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub f: usize,
    pub kind: InstanceKind,
    pub expect: Expect,
}

impl Instance {
    fn best(name: impl Into<String>, graph: Graph, expect: Expect) -> Self {
        Instance { name: name.into(), graph, f: 1, kind: InstanceKind::Best, expect }
    }

    fn fixed(name: impl Into<String>, o: Orientation, expect: Expect) -> Self {
        Instance { name: name.into(), graph: o.graph().clone(), f: 1, kind: InstanceKind::Fixed(o), expect }
    }

    pub fn solve(&self, opts: &VerifyOptions) -> Result<GameValue> {
        let cfg = SolverConfig { threads: opts.threads, budget: opts.budget, ..Default::default() };
        match &self.kind {
            InstanceKind::Best => solve_best_orientation(&self.graph, self.f, &cfg),
            InstanceKind::Fixed(o) => solve_orientation(o, self.f, None, &cfg),
        }
    }
}

fn edge_list(g: &Graph) -> String {
    let parts: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), parts.join(" "))
}

fn largest_enumerated(opts: &VerifyOptions) -> usize {
    if opts.slow {
        6
    } else {
        5
    }
}

/// The solved instances of one of the first six suites, in a fixed order.
pub fn instances(suite: &str, opts: &VerifyOptions) -> Result<Vec<Instance>> {
    let seed = opts.seed;
    let mut out = Vec::new();
    match suite {
        "complete-exact" => {
            let last = if opts.slow { 7 } else { 6 };
            for (n, v) in [(3, 1), (4, 2), (5, 2), (6, 3), (7, 4)].into_iter().filter(|&(n, _)| n <= last) {
                out.push(Instance::best(format!("K{n}"), generate::complete(n), Expect::Exactly(v)));
            }
        }
        "bipartite-exact" => {
            out.push(Instance::best("K2,2", generate::complete_bipartite(2, 2), Expect::Exactly(1)));
            out.push(Instance::best("K4,4", generate::complete_bipartite(4, 4), Expect::Exactly(3)));
        }
        "subcubic" => {
            let named = [
                ("K4", generate::complete(4), Some(2)),
                ("K3,3", generate::complete_bipartite(3, 3), None),
                ("prism3", generate::prism(3), None),
                ("cube", generate::cube(), None),
                ("petersen", generate::petersen(), Some(2)),
            ];
            for (name, g, exact) in named {
                let o = orient_subcubic(&g)?.orientation;
                out.push(Instance::fixed(name, o, exact.map_or(Expect::AtMost(2), Expect::Exactly)));
            }
            for i in 0..20u64 {
                let n = 4 + 2 * (i as usize % 6);
                let g = generate::random_regular(n, 3, seed + i)?;
                let o = orient_subcubic(&g)?.orientation;
                out.push(Instance::fixed(format!("cubic n={n} seed={}", seed + i), o, Expect::AtMost(2)));
            }
        }
        "two-trees" => {
            for i in 0..20u64 {
                let n = 3 + (i as usize % 10);
                let g = generate::random_ktree(n, 2, seed + i);
                let o = orient_ktree(&g, 2)?;
                out.push(Instance::fixed(format!("2-tree n={n} seed={}", seed + i), o, Expect::AtMost(2)));
            }
        }
        "degree4" => {
            for i in 0..10u64 {
                let n = 5 + (i as usize % 8);
                let g = generate::random_regular(n, 4, seed + i)?;
                let o = orient_bounded_degree(&g, 4)?.orientation;
                out.push(Instance::fixed(format!("4-regular n={n} seed={}", seed + i), o, Expect::AtMost(5)));
            }
        }
        "b1-characterisation" => {
            for n in 1..=largest_enumerated(opts) {
                for g in enumerate::connected_graphs(n)? {
                    let expect = if bounds::classify_b1(&g)? { Expect::Exactly(1) } else { Expect::AtLeast(2) };
                    out.push(Instance::best(edge_list(&g), g, expect));
                }
            }
        }
        _ => {
            return Err(crate::Error::Unknown { kind: "instance suite", name: suite.to_string() });
        }
    }
    Ok(out)
}

/// One check per instance: solve it and compare with the expectation.
fn solve_all(rec: &mut Recorder, suite: &str, opts: &VerifyOptions) {
    let list = match instances(suite, opts) {
        Ok(l) => l,
        Err(e) => return rec.check(suite, "instances", || Err(e)),
    };
    for inst in list {
        rec.check(inst.name.clone(), inst.expect.to_string(), || {
            let v = inst.solve(opts)?;
            Ok((format!("beta = {}", v.beta), inst.expect.holds(v.beta), v.exact))
        });
    }
}

pub(super) fn complete_exact(rec: &mut Recorder, opts: &VerifyOptions) {
    solve_all(rec, "complete-exact", opts);
    // For f = 1 and n > 5 the multi-firefighter conjecture reads n - 3.
    let upto = if opts.slow { 7 } else { 6 };
    for n in 6..=upto {
        if let Ok(v) = Instance::best("", generate::complete(n), Expect::AtLeast(0)).solve(opts) {
            rec.observe(format!("K{n} f=1"), n - 3, v.beta);
        }
    }
}

pub(super) fn bipartite_exact(rec: &mut Recorder, opts: &VerifyOptions) {
    solve_all(rec, "bipartite-exact", opts);
    // Lower-bound formula values, worked out by hand.
    let cases = [
        ((4, 4, 1), int(3)),
        ((2, 2, 1), int(1)),
        ((3, 3, 1), ratio(3, 2)),
        ((6, 6, 1), int(4)),
        ((3, 6, 1), int(3)),
        ((4, 4, 2), int(1)),
        ((5, 20, 2), int(4)),
    ];
    for ((p, q, f), want) in cases {
        rec.check(format!("lower K{p},{q} f={f}"), want.to_string(), || {
            let got = formulas::bipartite_lower(p, q, f);
            Ok((got.to_string(), got == want, true))
        });
    }
}

pub(super) fn subcubic(rec: &mut Recorder, opts: &VerifyOptions) {
    solve_all(rec, "subcubic", opts);
}

pub(super) fn two_trees(rec: &mut Recorder, opts: &VerifyOptions) {
    solve_all(rec, "two-trees", opts);
}

pub(super) fn degree4(rec: &mut Recorder, opts: &VerifyOptions) {
    solve_all(rec, "degree4", opts);
}

/// Aggregated per vertex count; the enumeration at six vertices alone has
/// tens of thousands of graphs.
pub(super) fn b1(rec: &mut Recorder, opts: &VerifyOptions) {
    let list = match instances("b1-characterisation", opts) {
        Ok(l) => l,
        Err(e) => return rec.check("b1", "instances", || Err(e)),
    };
    for n in 1..=largest_enumerated(opts) {
        let of_n: Vec<&Instance> = list.iter().filter(|i| i.graph.n() == n).collect();
        rec.check(
            format!("connected graphs on {n} vertices ({})", of_n.len()),
            "beta = 1 iff m <= n",
            || {
                let mut exact = true;
                for inst in &of_n {
                    let v = inst.solve(opts)?;
                    exact &= v.exact;
                    if !inst.expect.holds(v.beta) {
                        return Ok((format!("{}: beta = {}", inst.name, v.beta), false, exact));
                    }
                }
                Ok((format!("{} agree", of_n.len()), true, exact))
            },
        );
    }
}

pub(super) fn formulas(rec: &mut Recorder) {
    rec.check("layer recurrence vs closed form, 3<=D<=6, 2<=k<=5, 1<=f<D", "equal", || {
        for d in 3..=6 {
            for k in 2..=5 {
                for f in 1..d {
                    let (a, b) = (formulas::refined_recurrence(d, k, f), formulas::refined_closed(d, k, f));
                    if a != b {
                        return Ok((format!("D={d} k={k} f={f}: {a} vs {b}"), false, true));
                    }
                }
            }
        }
        Ok(("equal".into(), true, true))
    });
    for (d, k, want) in [(3, 3, 6), (4, 4, 35)] {
        rec.check(format!("refined D={d} chi={k} f=1"), want.to_string(), || {
            let got = formulas::refined_closed(d, k, 1);
            Ok((got.to_string(), got == int(want), true))
        });
    }
    rec.check("degree ladder d=3..6", "[2, 5, 17, 70]", || {
        let got: Vec<BigInt> = (3..=6).map(|d| bounds::beta_d_ladder(d, LadderSeed::Five)).collect();
        let ok = got == [2, 5, 17, 70].map(BigInt::from);
        Ok((format!("{got:?}"), ok, true))
    });
    rec.check("degree ladder monotone d=3..30", "non-decreasing", || {
        let got: Vec<BigInt> = (3..=30).map(|d| bounds::beta_d_ladder(d, LadderSeed::Five)).collect();
        let ok = got.windows(2).all(|w| w[0] <= w[1]);
        Ok((if ok { "non-decreasing".into() } else { format!("{got:?}") }, ok, true))
    });
}

fn simulate_patch(o: &Orientation, strategy: &str, starts: &[usize], expect: Expect) -> Result<(String, bool, bool)> {
    let mut worst = 0;
    for &s in starts {
        let mut st = make_strategy(strategy, &StrategyParams::default())?;
        let t = simulate(o, s, 1, st.as_mut())?;
        if !expect.holds(t.burned) {
            return Ok((format!("start {s}: burned {}", t.burned), false, true));
        }
        worst = worst.max(t.burned);
    }
    Ok((format!("worst burned {worst} over {} starts", starts.len()), true, true))
}

pub(super) fn grids(rec: &mut Recorder) {
    let (w, h) = (9, 9);
    let inside = |margin: usize| -> Vec<usize> {
        (margin..h - margin).flat_map(|y| (margin..w - margin).map(move |x| generate::grid_id(w, x, y))).collect()
    };
    rec.check("rect 9x9, starts at distance >= 3 from the boundary", "burned = 3", || {
        let o = orient_grid(GridKind::Rect, w, h)?;
        simulate_patch(&o, "grid-rect", &inside(3), Expect::Exactly(3))
    });
    rec.check("tri 9x9, interior starts", "burned <= 6", || {
        let o = orient_grid(GridKind::Tri, w, h)?;
        simulate_patch(&o, "grid-tri", &inside(1), Expect::AtMost(6))
    });
    rec.check("hex 8x8, every start", "burned <= 2", || {
        let o = orient_grid(GridKind::Hex, 8, 8)?;
        let all: Vec<usize> = (0..o.n()).collect();
        simulate_patch(&o, "subcubic", &all, Expect::AtMost(2))
    });
}

fn seeded_orientation(g: &Graph, seed: u64) -> Orientation {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let forward = (0..g.m()).map(|_| rng.gen::<bool>()).collect();
    Orientation::new(g.clone(), forward).expect("one flag per edge")
}

pub(super) fn oracle(rec: &mut Recorder, opts: &VerifyOptions) {
    let cfg = SolverConfig { threads: opts.threads, budget: opts.budget, ..Default::default() };
    let graphs: Vec<Graph> = (1..=5).flat_map(|n| enumerate::connected_graphs(n).expect("n <= 5")).collect();
    for round in 0..50u64 {
        let seed = opts.seed + round;
        rec.check(format!("fixed orientations, seed {seed}, {} graphs", graphs.len()), "per-start values equal", || {
            for (i, g) in graphs.iter().enumerate() {
                let o = seeded_orientation(g, seed.wrapping_mul(1 << 20) + i as u64);
                let v = solve_orientation(&o, 1, None, &cfg)?;
                let out = o.out_masks();
                for s in 0..o.n() {
                    let want = reference::start_value(&out, 1, s) as usize;
                    if v.per_start[s] != want {
                        return Ok((format!("{} start {s}: {} vs {want}", edge_list(g), v.per_start[s]), false, true));
                    }
                }
            }
            Ok(("equal".into(), true, true))
        });
    }
    rec.check(format!("best orientation, {} graphs", graphs.len()), "equal", || {
        let mut exact = true;
        for g in &graphs {
            let v = solve_best_orientation(g, 1, &cfg)?;
            exact &= v.exact;
            let want = reference::best_value(g, 1) as usize;
            if v.beta != want {
                return Ok((format!("{}: {} vs {want}", edge_list(g), v.beta), false, exact));
            }
        }
        Ok(("equal".into(), true, exact))
    });
}

/// Applicable bounds contradicted by a solved value, as readable names.
pub fn bound_violations(inst: &Instance, v: &GameValue) -> Vec<String> {
    let hints = BoundHints::default();
    let graph = bounds::graph_bounds(&inst.graph, inst.f, &hints);
    let witness = bounds::orientation_bounds(&v.orientation, inst.f);
    let mut bad: Vec<String> = witness.violations(v.beta).iter().map(|e| format!("orientation {}", e.name)).collect();
    let from_graph = match inst.kind {
        InstanceKind::Best => graph.violations(v.beta),
        // The value of one orientation is at least the best value, so only
        // the graph's lower bounds carry over.
        InstanceKind::Fixed(_) => graph
            .violations(v.beta)
            .into_iter()
            .filter(|e| e.kind == bounds::BoundKind::Lower)
            .collect(),
    };
    bad.extend(from_graph.iter().map(|e| format!("graph {}", e.name)));
    bad
}

pub(super) fn sandwich(rec: &mut Recorder, opts: &VerifyOptions) {
    for suite in &super::SUITES[..6] {
        let list = match instances(suite, opts) {
            Ok(l) => l,
            Err(e) => {
                rec.check(*suite, "instances", || Err(e));
                continue;
            }
        };
        let count = list.len();
        rec.check(format!("{suite} ({count} instances)"), "lower <= beta <= upper", || {
            let mut exact = true;
            for inst in &list {
                let v = inst.solve(opts)?;
                exact &= v.exact;
                let bad = bound_violations(inst, &v);
                if !bad.is_empty() {
                    return Ok((format!("{} beta {}: {}", inst.name, v.beta, bad.join(", ")), false, exact));
                }
            }
            Ok(("consistent".into(), true, exact))
        });
    }
}
