use num_bigint::BigInt;
use proptest::prelude::{any, prop_assert, proptest, ProptestConfig};

use super::*;
use crate::graph::generate;
use crate::solver::reference;

fn eff(r: &BoundReport, name: &str) -> (i64, bool) {
    let e = r.get(name).unwrap_or_else(|| panic!("missing {name}"));
    (e.effective.to_string().parse().unwrap(), e.applicable)
}

fn report(g: &Graph, f: usize) -> BoundReport {
    graph_bounds(g, f, &BoundHints::default())
}

#[test]
fn lower_bound_examples() {
    let r = report(&generate::complete_bipartite(4, 4), 1);
    assert_eq!(eff(&r, "biclique"), (3, true));
    assert_eq!(r.get("biclique").unwrap().value, formulas::int(3));
    let r = report(&generate::complete(7), 1);
    assert_eq!(eff(&r, "clique"), (4, true));
    let r = report(&generate::path(5), 1);
    assert_eq!(r.get("density").unwrap().value, formulas::ratio(4, 5));
    assert_eq!(eff(&r, "density"), (1, true));
}

#[test]
fn upper_bound_examples() {
    let r = report(&generate::complete(9), 2);
    assert_eq!(eff(&r, "complete"), (3, true));
    let hints = BoundHints { fvs: Some(vec![0, 1, 2]), ..Default::default() };
    let r = graph_bounds(&generate::complete(5), 1, &hints);
    assert_eq!(eff(&r, "fvs"), (4, true));
    let r = report(&generate::random_ktree(9, 2, 3), 1);
    assert_eq!(eff(&r, "ktree-half"), (2, true));
    assert!(!r.get("complete").unwrap().applicable);
}

#[test]
fn inapplicable_entries_are_reported_not_dropped() {
    let r = report(&generate::cycle(5), 1);
    let e = r.get("complete").unwrap();
    assert!(!e.applicable);
    assert!(e.note.is_some());
    assert!(!r.get("bipartite").unwrap().applicable);
}

#[test]
fn json_shape() {
    let r = report(&generate::complete(4), 1);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let first = &v.as_array().unwrap()[0];
    assert!(first["value"].is_string());
    assert!(first["applicable"].is_boolean());
    assert!(first["hypothesis"].is_string());
}

#[test]
fn b1_examples() {
    assert!(classify_b1(&generate::path(4)).unwrap());
    assert!(classify_b1(&generate::cycle(5)).unwrap());
    assert!(!classify_b1(&generate::complete(4)).unwrap());
    assert!(classify_b1(&Graph::empty(2)).is_err());
}

#[test]
fn bk_examples() {
    let k44 = generate::complete_bipartite(4, 4);
    let c = bk_necessary(&k44, 1);
    assert_eq!(c.verdict, BkVerdict::Excluded);
    assert!(!c.density_ok);
    assert_eq!(bk_necessary(&k44, 2).verdict, BkVerdict::Possible);
    assert_eq!(bk_necessary(&generate::random_tree(12, 5), 1).verdict, BkVerdict::Possible);
    // K_5 plus a long tail: whole-graph density passes, the core does not.
    let mut edges = generate::complete(5).edges().to_vec();
    edges.extend((4..20).map(|v| (v, v + 1)));
    let g = Graph::new(21, edges).unwrap();
    let c = bk_necessary(&g, 1);
    assert!(!c.density_ok);
    assert_eq!(c.degeneracy, 4);
}

#[test]
fn orientation_bound_examples() {
    let o = crate::orient::orient_complete(5).unwrap();
    let r = orientation_bounds(&o, 1);
    assert_eq!(eff(&r, "outdegree"), (2, true));
    assert_eq!(eff(&r, "radius"), (3, true));
    assert_eq!(r.best_lower(), BigInt::from(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bounds_sandwich_optimal_values(n in 2usize..=5, mask in any::<u16>(), f in 1usize..=2) {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> i & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let beta = reference::best_value(&g, f) as usize;
        let r = graph_bounds(&g, f, &BoundHints::default());
        prop_assert!(r.violations(beta).is_empty(), "{:?}", r.violations(beta));
        let o = crate::orient::orient_half(&g);
        let fixed = reference::fixed_value(&o.out_masks(), f) as usize;
        let ro = orientation_bounds(&o, f);
        prop_assert!(ro.violations(fixed).is_empty(), "{:?}", ro.violations(fixed));
    }
}
