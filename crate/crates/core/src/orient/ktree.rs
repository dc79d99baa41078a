use super::basic::complete_head;
use crate::error::{Error, Result};
use crate::graph::ktree::ktree_structure;
use crate::graph::Graph;
use crate::orientation::Orientation;

/// Central-clique orientation of a k-tree: the root clique is oriented like
/// a complete graph and each later vertex points to its parent clique, so
/// fire only ever moves towards the root clique.
pub fn orient_ktree(g: &Graph, k: usize) -> Result<Orientation> {
    let s = ktree_structure(g, k).ok_or_else(|| Error::pre("ktree", format!("input is not a {k}-tree")))?;
    let mut position = vec![0usize; g.n()];
    for (i, (v, _)) in s.order.iter().enumerate() {
        position[*v] = i + 1;
    }
    let root = s.central.clone();
    Ok(Orientation::from_fn(g.clone(), |_, u, v| {
        match (position[u], position[v]) {
            (0, 0) => complete_head(&root, u, v),
            (pu, pv) if pu > pv => v,
            _ => u,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn triangle_is_directed_cycle() {
        let o = orient_ktree(&generate::complete(3), 2).unwrap();
        assert!(o.out_degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn added_vertices_point_to_parent_clique() {
        for (n, k, seed) in [(6, 2, 0), (8, 3, 1), (12, 2, 5), (10, 4, 3)] {
            let g = generate::random_ktree(n, k, seed);
            let s = ktree_structure(&g, k).unwrap();
            let o = orient_ktree(&g, k).unwrap();
            for (v, parent) in &s.order {
                let mut outs = o.out_neighbours(*v).to_vec();
                outs.sort_unstable();
                assert_eq!(&outs, parent);
            }
            // No arc leaves the root clique.
            for &c in &s.central {
                assert!(o.out_neighbours(c).iter().all(|h| s.central.contains(h)));
            }
            // Root clique oriented as the complete-graph construction.
            let rootdeg: Vec<usize> = s.central.iter().map(|&c| o.out_degree(c)).collect();
            if (k + 1) % 2 == 1 {
                assert!(rootdeg.iter().all(|&d| d == k / 2));
            } else {
                assert_eq!(rootdeg.iter().filter(|&&d| d == 0).count(), 1);
            }
        }
    }

    #[test]
    fn rejects_non_ktree() {
        assert!(orient_ktree(&generate::cycle(5), 2).is_err());
    }
}
