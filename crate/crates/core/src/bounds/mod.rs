//! Closed-form lower and upper bounds on the number of burnt vertices.
//!
//! Every bound is reported together with its hypothesis and whether that
//! hypothesis holds for the instance at hand. Values are exact rationals;
//! the `effective` integer rounds a lower bound up and an upper bound down.

pub mod formulas;
mod membership;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

pub use formulas::{beta_d_ladder, LadderSeed};
pub use membership::{bk_necessary, classify_b1, BkCheck, BkVerdict};

use crate::bitset::VertexSet;
use crate::graph::ktree::{infer_k, ktree_structure};
use crate::graph::metrics::{graph_metrics, orientation_metrics};
use crate::graph::{cliques, colouring, forests, fvs, Graph};
use crate::orientation::Orientation;
use formulas::{ceil, floor, int, ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    /// A conjectured value, reported for comparison and never enforced.
    Conjecture,
}

/// What the bound is about: the best orientation of a graph, or one fixed
/// orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Graph,
    Orientation,
}

fn as_string<S: Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub scope: Scope,
    #[serde(serialize_with = "as_string")]
    pub value: BigRational,
    #[serde(serialize_with = "as_string")]
    pub effective: BigInt,
    pub applicable: bool,
    pub hypothesis: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundEntry {
    fn new(name: &'static str, kind: BoundKind, scope: Scope, value: BigRational, hypothesis: impl Into<String>) -> Self {
        let effective = match kind {
            BoundKind::Lower => ceil(&value),
            _ => floor(&value),
        };
        BoundEntry { name, kind, scope, value, effective, applicable: true, hypothesis: hypothesis.into(), note: None }
    }

    fn when(mut self, holds: bool, why_not: impl Into<String>) -> Self {
        if !holds {
            self.applicable = false;
            self.note = Some(why_not.into());
        }
        self
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Optional structure supplied by the caller instead of being computed.
#[derive(Debug, Clone, Default)]
pub struct BoundHints {
    pub k: Option<usize>,
    pub fvs: Option<Vec<usize>>,
    pub colouring: Option<Vec<Vec<usize>>>,
    pub forests: Option<Vec<Vec<usize>>>,
    pub ladder_seed: LadderSeed,
}

/// Graph invariants feeding the formulas.
#[derive(Debug, Clone, Serialize)]
pub struct Inputs {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub colours: usize,
    pub colours_exact: bool,
    pub forests: usize,
    pub fvs: Option<usize>,
    pub clique: usize,
    pub biclique: Option<(usize, usize)>,
    pub ktree_k: Option<usize>,
    pub diam: Option<usize>,
}

/// Largest vertex count for which the exact chromatic number is computed.
const EXACT_COLOURING_LIMIT: usize = 30;

pub fn inputs(g: &Graph, hints: &BoundHints) -> Inputs {
    let n = g.n();
    let (colours, colours_exact) = match &hints.colouring {
        Some(parts) if colouring::is_proper(g, parts) => (parts.iter().filter(|p| !p.is_empty()).count(), false),
        _ if n <= EXACT_COLOURING_LIMIT => (colouring::chromatic_number(g), true),
        _ => (colouring::greedy(g).len(), false),
    };
    let forests = match &hints.forests {
        Some(parts) if forests::is_forest_partition(g, parts) => parts.len(),
        _ => forests::forest_peel(g).len(),
    };
    let fvs = match &hints.fvs {
        Some(f) if fvs::is_fvs(g, &VertexSet::from_iter_in(n, f.iter().copied())) => Some(f.len()),
        _ => fvs::min_fvs(g).ok().map(|s| s.len()),
    };
    let ktree_k = hints
        .k
        .or_else(|| infer_k(g))
        .filter(|&k| ktree_structure(g, k).is_some());
    let diam = g.is_connected().then(|| graph_metrics(g).diam);
    Inputs {
        n,
        m: g.m(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        colours,
        colours_exact,
        forests,
        fvs,
        clique: cliques::max_clique(g).len(),
        biclique: cliques::greedy_biclique(g).map(|(a, b)| (a.len(), b.len())),
        ktree_k,
        diam,
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    fn effective(&self, kind: BoundKind) -> impl Iterator<Item = (&BoundEntry, &BigInt)> + '_ {
        self.entries.iter().filter(move |e| e.kind == kind && e.applicable).map(|e| (e, &e.effective))
    }

    /// Largest applicable lower bound (at least one).
    pub fn best_lower(&self) -> BigInt {
        self.effective(BoundKind::Lower).map(|(_, v)| v.clone()).max().unwrap_or(BigInt::from(1)).max(BigInt::from(1))
    }

    pub fn best_upper(&self) -> Option<BigInt> {
        self.effective(BoundKind::Upper).map(|(_, v)| v.clone()).min()
    }

    /// Applicable bounds contradicted by the value `beta`.
    pub fn violations(&self, beta: usize) -> Vec<&BoundEntry> {
        let b = BigInt::from(beta);
        self.entries
            .iter()
            .filter(|e| e.applicable)
            .filter(|e| match e.kind {
                BoundKind::Lower => e.effective > b,
                BoundKind::Upper => e.effective < b,
                BoundKind::Conjecture => false,
            })
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Lower bounds on the best-orientation value.
pub fn lower_bounds(f: usize, inp: &Inputs) -> Vec<BoundEntry> {
    use BoundKind::Lower;
    let g_ = Scope::Graph;
    let mut out = Vec::new();
    let (n, m) = (inp.n, inp.m);
    out.push(
        BoundEntry::new("density", Lower, g_, formulas::density(m, n), "f = 1; some vertex has outdegree at least m/n")
            .when(f == 1, "needs f = 1"),
    );
    let ceil_density = if n == 0 { 0 } else { m.div_ceil(n) as i64 };
    out.push(BoundEntry::new(
        "max-outdegree",
        Lower,
        g_,
        int((1 + ceil_density - f as i64).max(1)),
        "any f; a start of largest outdegree loses all but f of its out-neighbours",
    ));
    out.push(
        BoundEntry::new(
            "clique",
            Lower,
            g_,
            int(formulas::complete_exact_one(inp.clique) as i64),
            format!("f = 1; contains K_{} (subgraph monotonicity)", inp.clique),
        )
        .when(f == 1, "needs f = 1"),
    );
    if let Some(k) = inp.ktree_k {
        out.push(
            BoundEntry::new(
                "ktree-clique",
                Lower,
                g_,
                int(2.max(k as i64 - 2)),
                format!("f = 1; k-tree with k = {k} >= 3"),
            )
            .when(f == 1 && k >= 3, "needs f = 1 and k >= 3"),
        );
    }
    if let Some((p, q)) = inp.biclique {
        out.push(BoundEntry::new(
            "biclique",
            Lower,
            g_,
            formulas::bipartite_lower(p, q, f),
            format!("contains K_{{{p},{q}}}; pq/(p+q) + 1 - f, or + 2 - f when f <= pq/(p+q) - 1"),
        ));
        out.push(
            BoundEntry::new(
                "biclique-large",
                Lower,
                g_,
                int(p.min(q) as i64),
                format!("f = 1; contains K_{{{p},{q}}} with both sides at least 6"),
            )
            .when(f == 1 && p >= 6 && q >= 6, "needs f = 1 and both sides at least 6"),
        );
    }
    out.push(
        BoundEntry::new("min-degree", Lower, g_, ratio(inp.min_degree as i64, 2), "f = 1; at least delta/2")
            .when(f == 1, "needs f = 1"),
    );
    out
}

/// Upper bounds on the best-orientation value.
pub fn upper_bounds(g: &Graph, f: usize, inp: &Inputs, seed: LadderSeed) -> Vec<BoundEntry> {
    use BoundKind::Upper;
    let g_ = Scope::Graph;
    let mut out = Vec::new();
    let (n, m, delta) = (inp.n, inp.m, inp.max_degree);
    let complete = n >= 3 && m == n * (n - 1) / 2;
    out.push(
        BoundEntry::new(
            "complete",
            Upper,
            g_,
            formulas::complete_upper(n.max(3), f),
            format!("g is complete on n = {n} >= 3 vertices"),
        )
        .when(complete, "g is not a complete graph on at least 3 vertices"),
    );
    match g.bipartition() {
        Some(side) if m > 0 => {
            let max_deg = |c: bool| (0..n).filter(|&v| side[v] == c).map(|v| g.degree(v)).max().unwrap_or(0);
            out.push(BoundEntry::new(
                "bipartite",
                Upper,
                g_,
                formulas::bipartite_upper(max_deg(false), max_deg(true), f),
                "g is bipartite; all arcs leave the side of smaller maximum degree",
            ));
        }
        _ => out.push(
            BoundEntry::new("bipartite", Upper, g_, int(n as i64), "g is bipartite")
                .when(false, "g is not bipartite or has no edges"),
        ),
    }
    let chi = inp.colours;
    let colour_note = if inp.colours_exact { "chromatic number" } else { "colours of a proper colouring" };
    out.push(
        BoundEntry::new("max-degree", Upper, g_, int(1), format!("f >= max degree {delta}"))
            .when(f >= delta, format!("needs f >= {delta}")),
    );
    out.push(
        BoundEntry::new(
            "chromatic",
            Upper,
            g_,
            formulas::chromatic_upper(delta, chi),
            format!("1 <= f < max degree {delta}; k = {chi} ({colour_note})"),
        )
        .when(f < delta, format!("needs f < {delta}")),
    );
    out.push(if delta > 2 && f < delta {
        // The layer count S_t is a number of vertices; once the recurrence
        // turns negative the fire has already stopped and the sum no longer
        // bounds anything.
        let counts_valid = formulas::colour_layer_sizes(delta, chi, f).iter().all(|s| *s >= int(0));
        BoundEntry::new(
            "chromatic-refined",
            Upper,
            g_,
            formulas::refined_closed(delta, chi, f),
            format!("max degree {delta} > 2, 1 <= f < {delta}; k = {chi} ({colour_note}); every layer size S_t >= 0"),
        )
        .when(counts_valid, "the layer recurrence turns negative before t = k")
    } else {
        BoundEntry::new("chromatic-refined", Upper, g_, int(0), "max degree > 2 and f < max degree")
            .when(false, "needs max degree > 2 and f < max degree")
    });
    let a = inp.forests;
    out.push(
        BoundEntry::new("arboricity", Upper, g_, int(1), format!("f >= a(G); a(G) <= {a} (estimate-based)"))
            .when(f >= a, format!("needs f >= {a}")),
    );
    out.push(if a >= 2 {
        BoundEntry::new(
            "arboricity-minus-one",
            Upper,
            g_,
            formulas::one() + ratio(n as i64 - 1, a as i64),
            format!("f >= a(G) - 1; a(G) <= {a} (estimate-based)"),
        )
        .when(f + 1 >= a, format!("needs f >= {}", a - 1))
    } else {
        BoundEntry::new("arboricity-minus-one", Upper, g_, int(1), "a(G) >= 2").when(false, "forest: a(G) <= 1")
    });
    out.push(match inp.fvs {
        Some(size) => BoundEntry::new(
            "fvs",
            Upper,
            g_,
            formulas::fvs_upper(size, f),
            format!("g - F is a forest with |F| = {size}"),
        ),
        None => BoundEntry::new("fvs", Upper, g_, int(n as i64), "g - F is a forest")
            .when(false, "no feedback vertex set computed; supply one"),
    });
    if let Some(k) = inp.ktree_k {
        let diam = inp.diam.unwrap_or(0).max(1);
        let near = f * diam <= 2 * k;
        out.push(
            BoundEntry::new(
                "ktree-near",
                Upper,
                g_,
                formulas::ktree_near(k, diam, f),
                format!("k-tree with k = {k}, diam = {diam}, f <= 2k/diam"),
            )
            .when(near, "needs f <= 2k/diam"),
        );
        out.push(
            BoundEntry::new(
                "ktree-far",
                Upper,
                g_,
                formulas::ktree_far(k, f),
                format!("k-tree with k = {k}, diam = {diam}, f > 2k/diam"),
            )
            .when(!near, "needs f > 2k/diam"),
        );
        out.push(
            BoundEntry::new("ktree-half", Upper, g_, formulas::ktree_half(k), format!("k-tree with k = {k}, f >= floor(k/2)"))
                .when(f >= k / 2, format!("needs f >= {}", k / 2)),
        );
    }
    let comps_unicyclic = g.components().iter().all(|c| {
        let inside = g.edges().iter().filter(|&&(u, _)| c.binary_search(&u).is_ok()).count();
        inside <= c.len()
    });
    out.push(
        BoundEntry::new("unicyclic", Upper, g_, int(1), "every component has at most one cycle")
            .when(comps_unicyclic, "some component has two or more cycles"),
    );
    out.push(if delta >= 3 {
        BoundEntry::new(
            "degree-ladder",
            Upper,
            g_,
            BigRational::from_integer(beta_d_ladder(delta, seed)),
            format!("max degree {delta} >= 3, f >= 1"),
        )
    } else {
        BoundEntry::new("degree-ladder", Upper, g_, int(1), "max degree >= 3").when(false, "max degree below 3")
    });
    out
}

/// Values conjectured but not proven; reported for comparison only.
pub fn conjectures(g: &Graph, f: usize, inp: &Inputs) -> Vec<BoundEntry> {
    let mut out = Vec::new();
    let n = inp.n;
    if n >= 3 && inp.m == n * (n - 1) / 2 {
        out.push(
            BoundEntry::new("complete-many", BoundKind::Conjecture, Scope::Graph, int(n as i64 - 3 * f as i64), "complete, n > 4f + 1")
                .when(n > 4 * f + 1, "needs n > 4f + 1"),
        );
    }
    if let Some(side) = g.bipartition() {
        let a = side.iter().filter(|&&s| !s).count();
        let b = n - a;
        if a * b == inp.m && inp.m > 0 {
            out.push(BoundEntry::new(
                "bipartite-many",
                BoundKind::Conjecture,
                Scope::Graph,
                int((1 + a.min(b) as i64 - f as i64).max(1)),
                "complete bipartite, min{p,q} > 3f + 1; 1 + min{p,q} - f",
            )
            .when(a.min(b) > 3 * f + 1, "needs min{p,q} > 3f + 1"));
        }
    }
    out
}

/// Names of upper bounds whose formula is checked against the proven
/// lower bounds before being reported as applicable.
const GATED: &[&str] = &["ktree-near", "ktree-far"];

/// All graph-level bounds for `g` with `f` firefighters.
pub fn graph_bounds(g: &Graph, f: usize, hints: &BoundHints) -> BoundReport {
    let inp = inputs(g, hints);
    let mut entries = lower_bounds(f, &inp);
    let floor = entries
        .iter()
        .filter(|e| e.applicable)
        .map(|e| e.effective.clone())
        .max()
        .unwrap_or(BigInt::from(1));
    for mut e in upper_bounds(g, f, &inp, hints.ladder_seed) {
        if e.applicable && GATED.contains(&e.name) && e.effective < floor {
            e = e.when(false, format!("formula value is below the proven lower bound {floor}"));
        }
        entries.push(e);
    }
    entries.extend(conjectures(g, f, &inp));
    BoundReport { entries }
}

/// Bounds on the value of one fixed orientation.
pub fn orientation_bounds(o: &Orientation, f: usize) -> BoundReport {
    use BoundKind::{Lower, Upper};
    let s = Scope::Orientation;
    let n = o.n();
    let dplus = o.max_out_degree();
    let metrics = orientation_metrics(o);
    let layered = (0..n).map(|u| metrics.reach_size[u] - metrics.reach_ecc[u]).max().unwrap_or(0);
    let strongly = metrics.reach_size.iter().all(|&r| r == n);
    let mut entries = vec![
        BoundEntry::new(
            "outdegree",
            Lower,
            s,
            int((1 + dplus as i64 - f as i64).max(1)),
            format!("start at a vertex of outdegree {dplus}"),
        ),
        BoundEntry::new("outdegree-all", Upper, s, int(1), format!("f >= max outdegree {dplus}"))
            .when(f >= dplus, format!("needs f >= {dplus}")),
        BoundEntry::new(
            "radius",
            Upper,
            s,
            int(layered as i64),
            "protect one vertex per distance layer; max over starts of reach size minus reach eccentricity",
        ),
    ];
    if strongly {
        let rad = metrics.rad.unwrap_or(0);
        entries[2] = entries[2].clone().noted(format!("strongly connected: equals n - rad = {} - {rad}", n));
    }
    entries.push(if dplus >= 1 {
        BoundEntry::new(
            "outdegree-minus-one",
            Upper,
            s,
            formulas::one() + ratio(n as i64 - 1, dplus as i64),
            format!("f >= max outdegree - 1 = {}", dplus.saturating_sub(1)),
        )
        .when(f + 1 >= dplus, format!("needs f >= {}", dplus.saturating_sub(1)))
    } else {
        BoundEntry::new("outdegree-minus-one", Upper, s, int(1), "max outdegree >= 1").when(false, "no arcs")
    });
    BoundReport { entries }
}

#[cfg(test)]
mod tests;
