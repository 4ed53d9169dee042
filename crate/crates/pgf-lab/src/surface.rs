//! The ambient surface: a fixed one-vertex triangulation of the closed
//! orientable genus-g surface, plus cutting and complexity bookkeeping.
//!
//! Conventions, used everywhere downstream:
//! - Every triangle is oriented counterclockwise. Slot `k` of a triangle is
//!   the side running from corner `k` to corner `k+1 (mod 3)`.
//! - Every edge appears in exactly two slots. One slot traverses the edge
//!   "forward", the other "backward"; gluing reverses direction, which is
//!   the orientation-consistent identification.
//! - All edge endpoints are identified to the single vertex, so each edge is
//!   a loop and the vertex link is a cycle through all `3 * num_triangles`
//!   triangle corners.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A (triangle, slot) position in a triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seat {
    pub tri: u32,
    pub slot: u8,
}

impl Seat {
    pub fn new(tri: usize, slot: usize) -> Self {
        Seat {
            tri: tri as u32,
            slot: slot as u8,
        }
    }
    pub fn tri(&self) -> usize {
        self.tri as usize
    }
    pub fn slot(&self) -> usize {
        self.slot as usize
    }
}

/// Bare triangulation data: triangles with edge ids per slot, and for each
/// edge its two seats (forward seat first).
///
/// This is the structure that internal flip moves act on; the public,
/// immutable [`TriangulatedSurface`] wraps the canonical one per genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    tri_edges: Vec<[usize; 3]>,
    edge_seats: Vec<[Seat; 2]>,
}

impl Triangulation {
    /// Build from a triangle list; the forward seat of each edge is its
    /// first appearance in reading order.
    pub fn from_triangles(tri_edges: Vec<[usize; 3]>) -> Result<Self> {
        let num_edges = tri_edges
            .iter()
            .flat_map(|t| t.iter())
            .max()
            .map(|m| m + 1)
            .unwrap_or(0);
        let mut seats: Vec<Vec<Seat>> = vec![Vec::new(); num_edges];
        for (t, tri) in tri_edges.iter().enumerate() {
            for (k, &e) in tri.iter().enumerate() {
                seats[e].push(Seat::new(t, k));
            }
        }
        let mut edge_seats = Vec::with_capacity(num_edges);
        for (e, s) in seats.into_iter().enumerate() {
            if s.len() != 2 {
                return Err(Error::Invalid(format!(
                    "edge {e} appears in {} slots, expected 2",
                    s.len()
                )));
            }
            edge_seats.push([s[0], s[1]]);
        }
        let tr = Triangulation {
            tri_edges,
            edge_seats,
        };
        tr.check_connected_one_vertex()?;
        Ok(tr)
    }

    pub fn num_edges(&self) -> usize {
        self.edge_seats.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.tri_edges.len()
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.tri_edges
    }

    pub fn edge(&self, seat: Seat) -> usize {
        self.tri_edges[seat.tri()][seat.slot()]
    }

    pub fn seats(&self, edge: usize) -> [Seat; 2] {
        self.edge_seats[edge]
    }

    /// True if `seat` is the forward seat of its edge.
    pub fn is_forward(&self, seat: Seat) -> bool {
        self.edge_seats[self.edge(seat)][0] == seat
    }

    /// The other seat glued to this one.
    pub fn glued(&self, seat: Seat) -> Seat {
        let [a, b] = self.edge_seats[self.edge(seat)];
        if a == seat {
            b
        } else {
            a
        }
    }

    /// Whether the two triangles adjacent to `edge` are distinct, i.e. the
    /// edge is flippable.
    pub fn flippable(&self, edge: usize) -> bool {
        let [a, b] = self.edge_seats[edge];
        a.tri != b.tri
    }

    /// Euler characteristic assuming one vertex.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.num_edges() as i64 + self.num_triangles() as i64
    }

    /// The corner walk around the vertex: starting at corner `(t, j)`, cross
    /// side `j` near corner `j` and land at the corner after the glued side.
    pub fn next_corner(&self, t: usize, j: usize) -> (usize, usize) {
        let g = self.glued(Seat::new(t, j));
        (g.tri(), (g.slot() + 1) % 3)
    }

    /// The cyclic sequence of corners around the (single) vertex, starting
    /// at corner (0, 0). Crossing from entry `i` to entry `i+1` passes the
    /// germ of `edge(corner_i.tri, corner_i.slot)` at that corner.
    pub fn vertex_corner_cycle(&self) -> Vec<(usize, usize)> {
        let mut cycle = Vec::with_capacity(3 * self.num_triangles());
        let start = (0usize, 0usize);
        let mut cur = start;
        loop {
            cycle.push(cur);
            cur = self.next_corner(cur.0, cur.1);
            if cur == start {
                break;
            }
        }
        cycle
    }

    fn check_connected_one_vertex(&self) -> Result<()> {
        if self.num_triangles() == 0 {
            return Err(Error::Invalid("empty triangulation".into()));
        }
        let cycle = self.vertex_corner_cycle();
        if cycle.len() != 3 * self.num_triangles() {
            return Err(Error::Invalid(format!(
                "triangulation has more than one vertex (corner cycle length {}, expected {})",
                cycle.len(),
                3 * self.num_triangles()
            )));
        }
        Ok(())
    }

    /// Canonical form for deduplication in searches: triangle slots rotated
    /// to put the smallest edge id first, triangles sorted.
    pub fn canonical_key(&self) -> Vec<[usize; 3]> {
        let mut tris: Vec<[usize; 3]> = self
            .tri_edges
            .iter()
            .map(|&[a, b, c]| {
                let rots = [[a, b, c], [b, c, a], [c, a, b]];
                *rots.iter().min().unwrap()
            })
            .collect();
        tris.sort_unstable();
        tris
    }
}

/// A connected piece of the surface cut along a multicurve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsurfacePiece {
    pub genus: u32,
    pub boundary_count: u32,
    /// For each boundary circle, the index (into the cutting multicurve's
    /// component list) of the component it is parallel to.
    pub boundary_curves: Vec<usize>,
}

impl SubsurfacePiece {
    /// Complexity `xi = 3 * genus - 3 + boundary_count`.
    pub fn complexity(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.boundary_count as i64
    }

    pub fn is_pants(&self) -> bool {
        self.complexity() == 0
    }

    pub fn is_annulus(&self) -> bool {
        self.genus == 0 && self.boundary_count == 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

/// The ambient closed surface with its canonical one-vertex triangulation.
///
/// Immutable after construction; all operations on curves reference it by
/// shared pointer. Two surfaces are interchangeable iff their genus matches
/// (the triangulation per genus is canonical).
#[derive(Clone, Debug)]
pub struct TriangulatedSurface {
    genus: u32,
    tri: Triangulation,
    vertex_link: Vec<u64>,
    /// For each (triangle, slot), the polygon side it came from in the coned
    /// 4g-gon construction; `None` for cone-diagonal seats.
    side_of_seat: Vec<Option<u16>>,
}

impl PartialEq for TriangulatedSurface {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus
    }
}
impl Eq for TriangulatedSurface {}

/// On-disk format: a versioned JSON document.
#[derive(Serialize, Deserialize)]
pub struct SurfaceFile {
    pub version: u32,
    pub genus: u32,
    pub triangles: Vec<[usize; 3]>,
}

impl TriangulatedSurface {
    /// Deterministic canonical triangulation for each genus: the 4g-gon with
    /// the standard identification word `a1 b1 a1' b1' ... ag bg ag' bg'`,
    /// coned from its first vertex. Identical across runs and platforms.
    pub fn build(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let g = genus as usize;
        let n = 4 * g; // polygon sides
        // Edge id of polygon side i, and whether the side traverses it forward.
        let side_label = |i: usize| -> (usize, bool) {
            let k = i / 4;
            match i % 4 {
                0 => (2 * k, true),
                1 => (2 * k + 1, true),
                2 => (2 * k, false),
                _ => (2 * k + 1, false),
            }
        };
        // Diagonal P0->Pj for j in 2..=n-2 gets edge id 2g + (j-2).
        let diag = |j: usize| -> usize { 2 * g + (j - 2) };

        let mut tri_edges = Vec::with_capacity(n - 2);
        // Directions per slot, to order edge seats forward-first.
        let mut dirs: Vec<[bool; 3]> = Vec::with_capacity(n - 2);
        for j in 1..=(n - 2) {
            let (slot0, d0) = if j == 1 {
                let (e, d) = side_label(0);
                (e, d)
            } else {
                (diag(j), true)
            };
            let (slot1, d1) = side_label(j);
            let (slot2, d2) = if j == n - 2 {
                let (e, d) = side_label(n - 1);
                // Traversing side s_{n-1} from P_{n-1} to P0 is forward along
                // the polygon side, so the edge direction is the label's.
                (e, d)
            } else {
                (diag(j + 1), false)
            };
            tri_edges.push([slot0, slot1, slot2]);
            dirs.push([d0, d1, d2]);
        }

        let num_edges = 6 * g - 3;
        let mut fwd: Vec<Option<Seat>> = vec![None; num_edges];
        let mut bwd: Vec<Option<Seat>> = vec![None; num_edges];
        for (t, (tri, dd)) in tri_edges.iter().zip(dirs.iter()).enumerate() {
            for k in 0..3 {
                let seat = Seat::new(t, k);
                let e = tri[k];
                let target = if dd[k] { &mut fwd[e] } else { &mut bwd[e] };
                if target.is_some() {
                    return Err(Error::Internal(format!(
                        "edge {e} has two {} seats in the canonical construction",
                        if dd[k] { "forward" } else { "backward" }
                    )));
                }
                *target = Some(seat);
            }
        }
        let mut edge_seats = Vec::with_capacity(num_edges);
        for e in 0..num_edges {
            match (fwd[e], bwd[e]) {
                (Some(f), Some(b)) => edge_seats.push([f, b]),
                _ => {
                    return Err(Error::Internal(format!(
                        "edge {e} missing a seat in the canonical construction"
                    )))
                }
            }
        }
        let tri = Triangulation {
            tri_edges,
            edge_seats,
        };
        tri.check_connected_one_vertex()?;
        if tri.euler_characteristic() != 2 - 2 * genus as i64 {
            return Err(Error::Internal(format!(
                "canonical triangulation has Euler characteristic {}, expected {}",
                tri.euler_characteristic(),
                2 - 2 * genus as i64
            )));
        }
        // The vertex link crosses each edge once near each of its two ends.
        let vertex_link = vec![2u64; num_edges];
        let mut side_of_seat = vec![None; tri.num_triangles() * 3];
        for i in 0..n {
            let (e, dir) = side_label(i);
            let seat = tri.seats(e)[if dir { 0 } else { 1 }];
            side_of_seat[seat.tri() * 3 + seat.slot()] = Some(i as u16);
        }
        Ok(TriangulatedSurface {
            genus,
            tri,
            vertex_link,
            side_of_seat,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn num_edges(&self) -> usize {
        self.tri.num_edges()
    }

    pub fn num_triangles(&self) -> usize {
        self.tri.num_triangles()
    }

    /// Complexity of the closed surface: `3g - 3`.
    pub fn complexity(&self) -> i64 {
        3 * self.genus as i64 - 3
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.tri.euler_characteristic()
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    /// Normal coordinates of the (inessential) vertex-linking curve.
    pub fn vertex_link_coords(&self) -> &[u64] {
        &self.vertex_link
    }

    /// Number of ambient-surface generators `a1, b1, ..., ag, bg`; the first
    /// `2g` edges of the canonical triangulation are these loops, the rest
    /// are cone diagonals.
    pub fn num_side_edges(&self) -> usize {
        2 * self.genus as usize
    }

    /// The polygon side this seat came from, if the seat carries a polygon
    /// side edge rather than a cone diagonal.
    pub fn polygon_side_of_seat(&self, seat: Seat) -> Option<usize> {
        self.side_of_seat[seat.tri() * 3 + seat.slot()].map(|s| s as usize)
    }

    /// Edge id and direction carried by polygon side `i`.
    pub fn polygon_side_edge(&self, i: usize) -> (usize, bool) {
        let k = i / 4;
        match i % 4 {
            0 => (2 * k, true),
            1 => (2 * k + 1, true),
            2 => (2 * k, false),
            _ => (2 * k + 1, false),
        }
    }

    pub fn to_file(&self) -> SurfaceFile {
        SurfaceFile {
            version: 1,
            genus: self.genus,
            triangles: self.tri.triangles().to_vec(),
        }
    }

    pub fn from_file(file: &SurfaceFile) -> Result<Self> {
        if file.version != 1 {
            return Err(Error::Invalid(format!(
                "unsupported surface file version {}",
                file.version
            )));
        }
        let canonical = TriangulatedSurface::build(file.genus)?;
        if canonical.tri.triangles() != file.triangles.as_slice() {
            return Err(Error::Invalid(
                "surface file does not match the canonical triangulation for its genus".into(),
            ));
        }
        Ok(canonical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_counts() {
        for g in 2..=5u32 {
            let s = TriangulatedSurface::build(g).unwrap();
            assert_eq!(s.num_edges(), (6 * g - 3) as usize);
            assert_eq!(s.num_triangles(), (4 * g - 2) as usize);
            assert_eq!(s.euler_characteristic(), 2 - 2 * g as i64);
        }
    }

    #[test]
    fn genus_below_two_rejected() {
        assert!(matches!(
            TriangulatedSurface::build(1),
            Err(Error::GenusTooSmall(1))
        ));
        assert!(matches!(
            TriangulatedSurface::build(0),
            Err(Error::GenusTooSmall(0))
        ));
    }

    #[test]
    fn one_vertex_corner_cycle() {
        for g in 2..=4u32 {
            let s = TriangulatedSurface::build(g).unwrap();
            let cycle = s.triangulation().vertex_corner_cycle();
            assert_eq!(cycle.len(), 3 * s.num_triangles());
        }
    }

    #[test]
    fn each_edge_has_forward_and_backward_seat() {
        let s = TriangulatedSurface::build(2).unwrap();
        let tri = s.triangulation();
        for e in 0..s.num_edges() {
            let [a, b] = tri.seats(e);
            assert!(tri.is_forward(a));
            assert!(!tri.is_forward(b));
            assert_eq!(tri.edge(a), e);
            assert_eq!(tri.edge(b), e);
        }
    }

    #[test]
    fn germ_cycle_sees_each_edge_twice() {
        let s = TriangulatedSurface::build(3).unwrap();
        let tri = s.triangulation();
        let mut counts = vec![0usize; s.num_edges()];
        for (t, j) in tri.vertex_corner_cycle() {
            counts[tri.edge(Seat::new(t, j))] += 1;
        }
        assert!(counts.iter().all(|&c| c == 2));
    }

    #[test]
    fn surface_roundtrip() {
        let s = TriangulatedSurface::build(2).unwrap();
        let json = serde_json::to_string(&s.to_file()).unwrap();
        let file: SurfaceFile = serde_json::from_str(&json).unwrap();
        let s2 = TriangulatedSurface::from_file(&file).unwrap();
        assert_eq!(s, s2);
    }
}
