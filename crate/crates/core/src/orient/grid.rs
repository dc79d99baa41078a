use serde::{Deserialize, Serialize};

use super::subcubic::orient_subcubic;
use crate::error::{Error, Result};
use crate::graph::generate;
use crate::orientation::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Rect,
    Tri,
    Hex,
}

/// Orientations of finite grid patches (vertex `(x, y)` has id `y*w + x`,
/// row `y = 0` at the bottom).
///
/// * `Rect`: rows point right to left; even columns point upwards, odd
///   columns downwards. Interior vertices are 2-outregular.
/// * `Tri`: rows point left to right; every edge between rows goes from the
///   odd row to the even row, so even rows are sinks between layers.
/// * `Hex`: the subcubic construction on the brick-wall patch.
pub fn orient_grid(kind: GridKind, w: usize, h: usize) -> Result<Orientation> {
    if w < 4 || h < 4 {
        return Err(Error::pre("grid", format!("patch {w}x{h} is too small; need at least 4x4")));
    }
    let xy = move |v: usize| (v % w, v / w);
    Ok(match kind {
        GridKind::Rect => Orientation::from_fn(generate::grid_rect(w, h), move |_, u, v| {
            let ((xu, yu), (xv, yv)) = (xy(u), xy(v));
            if yu == yv {
                if xu < xv {
                    u
                } else {
                    v
                }
            } else {
                let up = if yu > yv { u } else { v };
                let down = if yu > yv { v } else { u };
                if xu % 2 == 0 {
                    up
                } else {
                    down
                }
            }
        }),
        GridKind::Tri => Orientation::from_fn(generate::grid_tri(w, h), move |_, u, v| {
            let ((xu, yu), (xv, yv)) = (xy(u), xy(v));
            if yu == yv {
                if xu < xv {
                    v
                } else {
                    u
                }
            } else if yu % 2 == 1 {
                v
            } else {
                u
            }
        }),
        GridKind::Hex => orient_subcubic(&generate::grid_hex(w, h))?.orientation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::grid_id;

    #[test]
    fn rect_interior_two_outregular() {
        let o = orient_grid(GridKind::Rect, 7, 7).unwrap();
        for y in 1..6 {
            for x in 1..6 {
                assert_eq!(o.out_degree(grid_id(7, x, y)), 2);
            }
        }
        // Row arcs point left, even columns up, odd columns down.
        assert!(o.out_neighbours(grid_id(7, 2, 2)).contains(&grid_id(7, 1, 2)));
        assert!(o.out_neighbours(grid_id(7, 2, 2)).contains(&grid_id(7, 2, 3)));
        assert!(o.out_neighbours(grid_id(7, 3, 2)).contains(&grid_id(7, 3, 1)));
    }

    #[test]
    fn tri_layers() {
        let o = orient_grid(GridKind::Tri, 9, 9).unwrap();
        for y in 1..8 {
            for x in 1..8 {
                let v = grid_id(9, x, y);
                if y % 2 == 0 {
                    assert_eq!(o.out_degree(v), 1);
                } else {
                    assert_eq!(o.out_degree(v), 5);
                }
            }
        }
    }

    #[test]
    fn hex_and_small() {
        assert!(orient_grid(GridKind::Hex, 8, 8).unwrap().max_out_degree() <= 2);
        assert!(orient_grid(GridKind::Rect, 3, 8).is_err());
    }
}
