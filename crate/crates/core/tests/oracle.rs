//! Cross-checks against a deliberately simple game implementation written
//! here with ordered sets, sharing no code with the library's solvers.

use std::collections::BTreeSet;

use firebreak::game::replay;
use firebreak::graph::{enumerate, generate};
use firebreak::orient::orient_half;
use firebreak::solver::{solve_best_orientation, solve_orientation, SolverConfig};
use firebreak::{Graph, Orientation};

type Set = BTreeSet<usize>;

fn choose(pool: &[usize], k: usize) -> Vec<Set> {
    if k == 0 || pool.is_empty() {
        return vec![Set::new()];
    }
    let mut out = choose(&pool[1..], k);
    for mut rest in choose(&pool[1..], k - 1) {
        rest.insert(pool[0]);
        out.push(rest);
    }
    out
}

/// Fewest vertices that end up burning, defending optimally.
fn play(arcs: &[Vec<usize>], f: usize, burnt: &Set, guarded: &Set) -> usize {
    let free: Vec<usize> = (0..arcs.len()).filter(|v| !burnt.contains(v) && !guarded.contains(v)).collect();
    choose(&free, f)
        .into_iter()
        .map(|pick| {
            let guarded: Set = guarded.union(&pick).copied().collect();
            let next: Set = burnt
                .iter()
                .flat_map(|&v| arcs[v].iter().copied())
                .filter(|w| !burnt.contains(w) && !guarded.contains(w))
                .collect();
            if next.is_empty() {
                burnt.len()
            } else {
                play(arcs, f, &burnt.union(&next).copied().collect(), &guarded)
            }
        })
        .min()
        .unwrap()
}

fn arcs_of(o: &Orientation) -> Vec<Vec<usize>> {
    (0..o.n()).map(|v| o.out_neighbours(v).to_vec()).collect()
}

fn worst(arcs: &[Vec<usize>], f: usize) -> usize {
    (0..arcs.len()).map(|s| play(arcs, f, &Set::from([s]), &Set::new())).max().unwrap()
}

fn best(g: &Graph, f: usize) -> usize {
    (0u32..1 << g.m())
        .map(|code| {
            let mut arcs = vec![Vec::new(); g.n()];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if code >> e & 1 == 0 {
                    arcs[u].push(v);
                } else {
                    arcs[v].push(u);
                }
            }
            worst(&arcs, f)
        })
        .min()
        .unwrap()
}

fn single() -> SolverConfig {
    SolverConfig { threads: Some(1), ..Default::default() }
}

#[test]
fn fixed_orientations_match() {
    let mut graphs = vec![generate::petersen(), generate::cube(), generate::complete(6), generate::prism(4)];
    graphs.extend((0..4).map(|s| generate::random_ktree(9, 2, s)));
    for g in graphs {
        let o = orient_half(&g);
        for f in 1..=2 {
            let v = solve_orientation(&o, f, None, &single()).unwrap();
            assert_eq!(v.beta, worst(&arcs_of(&o), f), "{:?} f={f}", g.edges());
            assert!(replay(&o, &v.trace).is_valid());
            assert_eq!(v.trace.burned, v.beta);
        }
    }
}

#[test]
fn best_orientation_values_match() {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(|n| enumerate::connected_graphs(n).unwrap()).collect();
    graphs.extend(enumerate::connected_graphs(5).unwrap().step_by(37));
    graphs.extend([generate::complete(5), generate::complete_bipartite(2, 3), generate::cycle(6)]);
    for g in &graphs {
        let v = solve_best_orientation(g, 1, &single()).unwrap();
        assert!(v.exact);
        assert_eq!(v.beta, best(g, 1), "{:?}", g.edges());
    }
}

#[test]
fn small_graphs_burn_one_exactly_when_at_most_one_cycle() {
    for n in 1..=4 {
        for g in enumerate::connected_graphs(n).unwrap() {
            assert_eq!(best(&g, 1) == 1, g.m() <= g.n(), "{:?}", g.edges());
        }
    }
}

#[test]
fn set_game_small_values() {
    // Values worked out with the set-based game above.
    assert_eq!(best(&generate::complete(4), 1), 2);
    assert_eq!(best(&generate::complete_bipartite(2, 2), 1), 1);
    assert_eq!(best(&generate::complete(4), 2), 1);
}
