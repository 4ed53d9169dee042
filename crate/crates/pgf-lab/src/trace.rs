//! Explicit tracing of normal curves through the triangulation.
//!
//! Normal coordinates determine, inside each triangle, a family of disjoint
//! corner arcs; tracing reconstructs the curve by following arcs across
//! edges. Positions on a side are frame positions: 0 at the side's start
//! corner, in the triangle's own counterclockwise frame. The two seats of an
//! edge see the same physical points in opposite order, so crossing an edge
//! reverses frame positions.
//!
//! Tracing is linear in total weight and is capped; coordinate-scale
//! operations (twists, intersections of twist images) never trace.

use crate::error::{Error, Result};
use crate::surface::{Seat, TriangulatedSurface};

/// Maximum total weight for operations that reconstruct curves pointwise.
pub const TRACE_WEIGHT_CAP: u64 = 1_000_000;

/// One transverse crossing of an edge: the curve leaves the triangle of
/// `exit` and enters the triangle of `enter`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub exit: Seat,
    pub exit_pos: u64,
    pub enter: Seat,
    pub enter_pos: u64,
}

/// A traced multicurve: components as cyclic crossing sequences.
#[derive(Clone, Debug)]
pub struct Trace {
    pub components: Vec<Vec<Crossing>>,
}

/// Corner counts of a triangle with side weights `s`: `corners[j]` arcs cut
/// corner `j` (between sides `j-1` and `j`).
pub fn corner_counts(s: [u64; 3]) -> Result<[u64; 3]> {
    let mut n = [0u64; 3];
    for j in 0..3 {
        let a = s[(j + 2) % 3] + s[j];
        let b = s[(j + 1) % 3];
        if a < b || (a - b) % 2 != 0 {
            return Err(Error::Internal(format!(
                "corner count undefined for side weights {s:?}"
            )));
        }
        n[j] = (a - b) / 2;
    }
    Ok(n)
}

/// Side weights of triangle `t` under coordinates `x`.
pub fn side_weights(surface: &TriangulatedSurface, x: &[u64], t: usize) -> [u64; 3] {
    let tr = surface.triangulation().triangles()[t];
    [x[tr[0]], x[tr[1]], x[tr[2]]]
}

/// The other endpoint, within its triangle, of the arc through frame
/// position `p` on side `k` of triangle `t`.
pub fn arc_partner(
    surface: &TriangulatedSurface,
    x: &[u64],
    seat: Seat,
    p: u64,
) -> Result<(Seat, u64)> {
    let s = side_weights(surface, x, seat.tri());
    let n = corner_counts(s)?;
    let k = seat.slot();
    if p >= s[k] {
        return Err(Error::Internal(format!(
            "position {p} out of range on side of weight {}",
            s[k]
        )));
    }
    if p < n[k] {
        // Arc cutting corner k: other end on side k-1.
        let k2 = (k + 2) % 3;
        Ok((Seat::new(seat.tri(), k2), s[k2] - 1 - p))
    } else {
        // Arc cutting corner k+1: other end on side k+1.
        let m = s[k] - 1 - p;
        let k2 = (k + 1) % 3;
        Ok((Seat::new(seat.tri(), k2), m))
    }
}

/// Crossing the edge at `(seat, p)`: the glued seat sees reversed frame
/// positions.
pub fn across_edge(surface: &TriangulatedSurface, x: &[u64], seat: Seat, p: u64) -> (Seat, u64) {
    let tri = surface.triangulation();
    let e = tri.edge(seat);
    let other = tri.glued(seat);
    (other, x[e] - 1 - p)
}

/// Trace all components of the multicurve with coordinates `x`.
pub fn trace(surface: &TriangulatedSurface, x: &[u64]) -> Result<Trace> {
    let total: u64 = x.iter().sum();
    if total > TRACE_WEIGHT_CAP {
        return Err(Error::Budget(format!(
            "trace: total weight {total} exceeds cap {TRACE_WEIGHT_CAP}"
        )));
    }
    let tri = surface.triangulation();
    // visited[(seat, pos)] per departure view.
    let mut visited: std::collections::HashSet<(Seat, u64)> = std::collections::HashSet::new();
    let mut components = Vec::new();
    for t in 0..surface.num_triangles() {
        for k in 0..3 {
            let seat = Seat::new(t, k);
            let w = x[tri.edge(seat)];
            for p in 0..w {
                if visited.contains(&(seat, p)) {
                    continue;
                }
                // Walk a full component starting by travelling into `t`.
                let mut comp = Vec::new();
                let start = (seat, p);
                let mut cur = start;
                loop {
                    visited.insert(cur);
                    let (s2, p2) = arc_partner(surface, x, cur.0, cur.1)?;
                    visited.insert((s2, p2));
                    let (s3, p3) = across_edge(surface, x, s2, p2);
                    comp.push(Crossing {
                        exit: s2,
                        exit_pos: p2,
                        enter: s3,
                        enter_pos: p3,
                    });
                    cur = (s3, p3);
                    if cur == start {
                        break;
                    }
                }
                components.push(comp);
            }
        }
    }
    Ok(Trace { components })
}

/// Coordinate vector of one traced component.
pub fn component_coords(surface: &TriangulatedSurface, comp: &[Crossing]) -> Vec<u64> {
    let tri = surface.triangulation();
    let mut coords = vec![0u64; surface.num_edges()];
    for c in comp {
        coords[tri.edge(c.exit)] += 1;
    }
    coords
}

/// Primitive components with multiplicities, unordered.
pub fn decompose(surface: &TriangulatedSurface, x: &[u64]) -> Result<Vec<(Vec<u64>, u64)>> {
    let tr = trace(surface, x)?;
    let mut groups: std::collections::BTreeMap<Vec<u64>, u64> = std::collections::BTreeMap::new();
    for comp in &tr.components {
        *groups.entry(component_coords(surface, comp)).or_insert(0) += 1;
    }
    // Sanity: weighted sum of component coordinates equals the input.
    let mut sum = vec![0u64; surface.num_edges()];
    for (coords, mult) in &groups {
        for (s, c) in sum.iter_mut().zip(coords.iter()) {
            *s += c * mult;
        }
    }
    if sum != x {
        return Err(Error::Internal(
            "decompose: component sum does not reproduce input coordinates".into(),
        ));
    }
    Ok(groups.into_iter().collect())
}

/// Free-homotopy word of a traced component, read off by developing the
/// component through the polygon model: each crossing of a polygon-side
/// edge contributes the side-pairing deck transformation of the side it
/// exits through, and crossings of cone diagonals contribute nothing.
pub fn component_word(surface: &TriangulatedSurface, comp: &[Crossing]) -> Vec<i32> {
    let exit_words = crate::words::side_exit_words(surface.genus());
    let mut word = Vec::new();
    for c in comp {
        if let Some(side) = surface.polygon_side_of_seat(c.exit) {
            word.extend_from_slice(&exit_words[side]);
        }
    }
    crate::words::free_reduce(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn surface() -> Arc<TriangulatedSurface> {
        Arc::new(TriangulatedSurface::build(2).unwrap())
    }

    #[test]
    fn vertex_link_traces_to_one_component() {
        let s = surface();
        let x: Vec<u64> = s.vertex_link_coords().to_vec();
        let tr = trace(&s, &x).unwrap();
        assert_eq!(tr.components.len(), 1);
        assert_eq!(
            component_coords(&s, &tr.components[0]),
            s.vertex_link_coords()
        );
    }

    #[test]
    fn doubled_link_has_multiplicity_two() {
        let s = surface();
        let x: Vec<u64> = s.vertex_link_coords().iter().map(|&c| 2 * c).collect();
        let d = decompose(&s, &x).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
    }

    #[test]
    fn arc_partner_involutive() {
        let s = surface();
        let x: Vec<u64> = s.vertex_link_coords().to_vec();
        for t in 0..s.num_triangles() {
            for k in 0..3 {
                let seat = Seat::new(t, k);
                let w = x[s.triangulation().edge(seat)];
                for p in 0..w {
                    let (s2, p2) = arc_partner(&s, &x, seat, p).unwrap();
                    let (s3, p3) = arc_partner(&s, &x, s2, p2).unwrap();
                    assert_eq!((s3, p3), (seat, p));
                }
            }
        }
    }
}
