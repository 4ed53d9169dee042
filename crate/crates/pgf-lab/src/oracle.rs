//! The flat polygon model: curves as chord systems in the 4g-gon.
//!
//! A traced multicurve becomes a system of straight chords in the polygon
//! (cone diagonals are interior and contribute no combinatorics). Boundary
//! points carry exact rational circle parameters, so chord crossings,
//! crossing order along a chord, and crossing orientation are exact. Bigons
//! are detected by the word problem in the surface group (a bigon disk may
//! contain the vertex) and removed by rerouting one curve parallel to the
//! other; the loop exits exactly at minimal position, since a non-minimal
//! configuration always contains an empty bigon whose reroute is accepted.
//!
//! This module is the brute-force reference for geometric intersection
//! numbers and the geometric substrate for cutting, filling tests, and
//! projection surgery.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multicurve::Multicurve;
use crate::trace;
use crate::words;

pub type PointId = usize;

#[derive(Clone, Debug)]
pub struct Point {
    pub side: usize,
    pub t: BigRational,
    pub partner: PointId,
    pub alive: bool,
}

/// A chord from its entry point to its exit point, both on the polygon
/// boundary. The next chord of the curve starts at `partner(p_out)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub p_in: PointId,
    pub p_out: PointId,
}

#[derive(Clone, Debug)]
pub struct CurveInConfig {
    pub system: usize,
    /// Cyclic chord sequence; curves with no side crossings are not stored.
    pub chords: Vec<Chord>,
}

/// An explicit transverse configuration of one or more curve systems.
#[derive(Clone, Debug)]
pub struct Config {
    pub genus: u32,
    pub exit_words: Vec<Vec<i32>>,
    pub points: Vec<Point>,
    pub sides: Vec<Vec<PointId>>,
    pub curves: Vec<CurveInConfig>,
    /// (side, rank) per point, kept in sync with `sides`.
    order: Vec<(u32, u32)>,
}

/// One transverse crossing between chords of different curves.
#[derive(Clone, Debug)]
pub struct Xing {
    pub curve_a: usize,
    pub chord_a: usize,
    pub param_a: BigRational,
    pub curve_b: usize,
    pub chord_b: usize,
    pub param_b: BigRational,
    /// Sign of cross(dir_a, dir_b).
    pub orient: i8,
}

impl Xing {
    pub fn chord_on(&self, curve: usize) -> usize {
        if self.curve_a == curve {
            self.chord_a
        } else {
            self.chord_b
        }
    }
    pub fn param_on(&self, curve: usize) -> &BigRational {
        if self.curve_a == curve {
            &self.param_a
        } else {
            &self.param_b
        }
    }
    pub fn other_curve(&self, curve: usize) -> usize {
        if self.curve_a == curve {
            self.curve_b
        } else {
            self.curve_a
        }
    }
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational point on the unit circle for parameter `t`.
fn circle_point(t: &BigRational) -> (BigRational, BigRational) {
    let t2 = t * t;
    let denom = &t2 + BigRational::one();
    let x = (BigRational::one() - &t2) / denom.clone();
    let y = (big(2) * t) / denom;
    (x, y)
}

fn cross2(ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational) -> BigRational {
    ax * by - ay * bx
}

impl Config {
    /// Build a transverse configuration with one curve system per input
    /// multicurve. Components with multiplicity are placed as parallel
    /// copies.
    pub fn build(systems: &[&Multicurve]) -> Result<Config> {
        if systems.is_empty() {
            return Err(Error::Invalid("no systems".into()));
        }
        let surface = systems[0].surface().clone();
        for m in systems {
            if m.surface().genus() != surface.genus() {
                return Err(Error::SurfaceMismatch(surface.genus(), m.surface().genus()));
            }
        }
        let genus = surface.genus();
        let nsides = 4 * genus as usize;
        let tri = surface.triangulation();

        struct RawCrossing {
            system: usize,
            comp: usize,
            exit_side: usize,
            exit_global: u64,
            enter_side: usize,
        }
        let mut raw: Vec<RawCrossing> = Vec::new();
        let mut comp_offset = 0usize;
        for (sys, m) in systems.iter().enumerate() {
            if m.is_empty() {
                continue;
            }
            let x = m
                .coords_u64()
                .ok_or_else(|| Error::Budget("polygon model: coordinates exceed u64".into()))?;
            let tr = trace::trace(&surface, &x)?;
            for comp in &tr.components {
                let mut any = false;
                for c in comp {
                    let e = tri.edge(c.exit);
                    let Some(exit_side) = surface.polygon_side_of_seat(c.exit) else {
                        continue; // cone diagonal
                    };
                    let enter_side = surface
                        .polygon_side_of_seat(c.enter)
                        .ok_or_else(|| Error::Internal("partner seat not a side".into()))?;
                    let exit_global = if tri.is_forward(c.exit) {
                        c.exit_pos
                    } else {
                        x[e] - 1 - c.exit_pos
                    };
                    raw.push(RawCrossing {
                        system: sys,
                        comp: comp_offset,
                        exit_side,
                        exit_global,
                        enter_side,
                    });
                    any = true;
                }
                if !any {
                    return Err(Error::Internal(
                        "essential component avoids every polygon side".into(),
                    ));
                }
                comp_offset += 1;
            }
        }

        // Two boundary point copies per crossing.
        let mut points: Vec<Point> = Vec::with_capacity(2 * raw.len());
        let mut exit_pt = vec![0usize; raw.len()];
        let mut enter_pt = vec![0usize; raw.len()];
        for (i, rc) in raw.iter().enumerate() {
            let pe = points.len();
            points.push(Point {
                side: rc.exit_side,
                t: BigRational::zero(),
                partner: pe + 1,
                alive: true,
            });
            points.push(Point {
                side: rc.enter_side,
                t: BigRational::zero(),
                partner: pe,
                alive: true,
            });
            exit_pt[i] = pe;
            enter_pt[i] = pe + 1;
        }
        // Merge order on each edge: (global position, system); a side that
        // traverses its edge backward sees the reverse.
        let nsys = systems.len() as u64;
        let mut key: HashMap<PointId, u64> = HashMap::new();
        for (i, rc) in raw.iter().enumerate() {
            let k = rc.exit_global * nsys + rc.system as u64;
            key.insert(exit_pt[i], k);
            key.insert(enter_pt[i], k);
        }
        let mut sides: Vec<Vec<PointId>> = vec![Vec::new(); nsides];
        for (pid, p) in points.iter().enumerate() {
            sides[p.side].push(pid);
        }
        let g = genus as i64;
        for (s, list) in sides.iter_mut().enumerate() {
            let (_e, dir) = surface.polygon_side_edge(s);
            list.sort_by_key(|pid| key[pid]);
            if !dir {
                list.reverse();
            }
            let count = list.len() as i64;
            for (rank, pid) in list.iter().enumerate() {
                points[*pid].t = big(s as i64 - 2 * g)
                    + BigRational::new(BigInt::from(rank as i64 + 1), BigInt::from(count + 1));
            }
        }

        // Chords per component: after re-entering at crossing k, run to the
        // exit of crossing k+1.
        let mut curves = Vec::new();
        let mut per_comp: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, rc) in raw.iter().enumerate() {
            per_comp.entry(rc.comp).or_default().push(i);
        }
        let mut comp_ids: Vec<usize> = per_comp.keys().copied().collect();
        comp_ids.sort_unstable();
        for comp in comp_ids {
            let list = &per_comp[&comp]; // already in trace order
            let n = list.len();
            let system = raw[list[0]].system;
            let chords = (0..n)
                .map(|k| Chord {
                    p_in: enter_pt[list[k]],
                    p_out: exit_pt[list[(k + 1) % n]],
                })
                .collect();
            curves.push(CurveInConfig { system, chords });
        }

        let mut cfg = Config {
            genus,
            exit_words: words::side_exit_words(genus),
            points,
            sides,
            curves,
            order: Vec::new(),
        };
        cfg.reindex();
        cfg.assert_consistent()?;
        Ok(cfg)
    }

    /// Refresh the (side, rank) order table.
    pub fn reindex(&mut self) {
        self.order = vec![(0, 0); self.points.len()];
        for (s, list) in self.sides.iter().enumerate() {
            for (rank, &pid) in list.iter().enumerate() {
                self.order[pid] = (s as u32, rank as u32);
            }
        }
    }

    /// Structural invariants.
    pub fn assert_consistent(&self) -> Result<()> {
        let g = self.genus as i64;
        for (s, list) in self.sides.iter().enumerate() {
            let lo = big(s as i64 - 2 * g);
            let hi = big(s as i64 + 1 - 2 * g);
            for w in list.windows(2) {
                if self.points[w[0]].t >= self.points[w[1]].t {
                    return Err(Error::Internal("side list not sorted".into()));
                }
            }
            for &pid in list {
                let p = &self.points[pid];
                if !p.alive || p.side != s || p.t <= lo || p.t >= hi {
                    return Err(Error::Internal("point outside its side interval".into()));
                }
                let q = &self.points[p.partner];
                if q.partner != pid || q.side != words::polygon_partner_side(s) {
                    return Err(Error::Internal("broken partner pairing".into()));
                }
            }
        }
        for c in &self.curves {
            let n = c.chords.len();
            for k in 0..n {
                let out = c.chords[k].p_out;
                let nxt = c.chords[(k + 1) % n].p_in;
                if self.points[out].partner != nxt {
                    return Err(Error::Internal(
                        "chords do not link through partners".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Chords cross iff their endpoint order keys interleave around the
    /// boundary (the boundary order never wraps between systems because all
    /// parameters live on a fixed open arc).
    pub fn chords_cross(&self, a: Chord, b: Chord) -> bool {
        let (a1, a2) = (self.order[a.p_in], self.order[a.p_out]);
        let (b1, b2) = (self.order[b.p_in], self.order[b.p_out]);
        let (lo, hi) = if a1 < a2 { (a1, a2) } else { (a2, a1) };
        let in1 = b1 > lo && b1 < hi;
        let in2 = b2 > lo && b2 < hi;
        in1 != in2
    }

    /// Crossing parameters along both chords and the orientation sign.
    /// Caller guarantees the chords cross.
    pub fn crossing_geometry(&self, a: Chord, b: Chord) -> (BigRational, BigRational, i8) {
        let (ax1, ay1) = circle_point(&self.points[a.p_in].t);
        let (ax2, ay2) = circle_point(&self.points[a.p_out].t);
        let (bx1, by1) = circle_point(&self.points[b.p_in].t);
        let (bx2, by2) = circle_point(&self.points[b.p_out].t);
        let dax = &ax2 - &ax1;
        let day = &ay2 - &ay1;
        let dbx = &bx2 - &bx1;
        let dby = &by2 - &by1;
        let denom = cross2(&dax, &day, &dbx, &dby);
        let wx = &bx1 - &ax1;
        let wy = &by1 - &ay1;
        let s = cross2(&wx, &wy, &dbx, &dby) / denom.clone();
        let u = cross2(&wx, &wy, &dax, &day) / denom.clone();
        let orient = if denom.is_positive() { 1 } else { -1 };
        (s, u, orient)
    }

    /// All crossings between chords of different curves, between systems
    /// only.
    pub fn crossings(&self) -> Vec<Xing> {
        let mut out = Vec::new();
        for (ci, cu) in self.curves.iter().enumerate() {
            for (cj, cv) in self.curves.iter().enumerate().skip(ci + 1) {
                if cu.system == cv.system {
                    continue;
                }
                for (ki, &cha) in cu.chords.iter().enumerate() {
                    for (kj, &chb) in cv.chords.iter().enumerate() {
                        if self.chords_cross(cha, chb) {
                            let (s, u, orient) = self.crossing_geometry(cha, chb);
                            out.push(Xing {
                                curve_a: ci,
                                chord_a: ki,
                                param_a: s,
                                curve_b: cj,
                                chord_b: kj,
                                param_b: u,
                                orient,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Fast count of crossings between distinct systems.
    pub fn crossing_count(&self) -> usize {
        let mut n = 0;
        for (ci, cu) in self.curves.iter().enumerate() {
            for cv in self.curves.iter().skip(ci + 1) {
                if cu.system == cv.system {
                    continue;
                }
                for &cha in &cu.chords {
                    for &chb in &cv.chords {
                        if self.chords_cross(cha, chb) {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    /// Whether any two chords of the same system cross (must never happen).
    pub fn same_system_violation(&self) -> bool {
        for (ci, cu) in self.curves.iter().enumerate() {
            for ka in 0..cu.chords.len() {
                for kb in ka + 1..cu.chords.len() {
                    if self.chords_cross(cu.chords[ka], cu.chords[kb]) {
                        return true;
                    }
                }
            }
            for cv in self.curves.iter().skip(ci + 1) {
                if cu.system != cv.system {
                    continue;
                }
                for &cha in &cu.chords {
                    for &chb in &cv.chords {
                        if self.chords_cross(cha, chb) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    pub fn exit_letter(&self, p: PointId) -> &[i32] {
        &self.exit_words[self.points[p].side]
    }

    /// Word read while travelling forward along curve `c` across `steps`
    /// polygon-side passages starting from the exit of chord `from`.
    pub fn arc_word_forward(&self, curve: usize, from: usize, steps: usize) -> Vec<i32> {
        let chords = &self.curves[curve].chords;
        let n = chords.len();
        let mut w = Vec::new();
        for i in 0..steps {
            w.extend_from_slice(self.exit_letter(chords[(from + i) % n].p_out));
        }
        words::free_reduce(&w)
    }

    /// Word read while travelling backward along curve `c` across `steps`
    /// passages starting from the entry of chord `from`.
    pub fn arc_word_backward(&self, curve: usize, from: usize, steps: usize) -> Vec<i32> {
        let chords = &self.curves[curve].chords;
        let n = chords.len();
        let mut w = Vec::new();
        let mut k = from;
        for _ in 0..steps {
            w.extend_from_slice(self.exit_letter(chords[k].p_in));
            k = (k + n - 1) % n;
        }
        words::free_reduce(&w)
    }

    /// The free-homotopy word of a whole curve of the configuration.
    pub fn curve_word(&self, curve: usize) -> Vec<i32> {
        let n = self.curves[curve].chords.len();
        self.arc_word_forward(curve, 0, n)
    }

    fn kill_point(&mut self, pid: PointId) {
        let side = self.points[pid].side;
        self.sides[side].retain(|&q| q != pid);
        self.points[pid].alive = false;
    }

    /// Insert a fresh point adjacent to `anchor` on its side, after it when
    /// `after` holds, with parameter strictly between the neighbors.
    fn insert_point(&mut self, anchor: PointId, after: bool, partner: PointId) -> PointId {
        let side = self.points[anchor].side;
        let g = self.genus as i64;
        let list = &self.sides[side];
        let idx = list.iter().position(|&q| q == anchor).expect("anchor");
        let anchor_t = self.points[anchor].t.clone();
        let neighbor_t = if after {
            list.get(idx + 1)
                .map(|&q| self.points[q].t.clone())
                .unwrap_or_else(|| big(side as i64 + 1 - 2 * g))
        } else if idx > 0 {
            self.points[list[idx - 1]].t.clone()
        } else {
            big(side as i64 - 2 * g)
        };
        let t = (anchor_t + neighbor_t) / big(2);
        let pid = self.points.len();
        self.points.push(Point {
            side,
            t,
            partner,
            alive: true,
        });
        let insert_at = if after { idx + 1 } else { idx };
        self.sides[side].insert(insert_at, pid);
        pid
    }
}

/// Crossing ids ordered along each curve by (chord, parameter).
pub fn order_along_curves(xs: &[Xing], num_curves: usize) -> Vec<Vec<usize>> {
    let mut per_curve: Vec<Vec<usize>> = vec![Vec::new(); num_curves];
    for (id, x) in xs.iter().enumerate() {
        per_curve[x.curve_a].push(id);
        per_curve[x.curve_b].push(id);
    }
    for (cu, list) in per_curve.iter_mut().enumerate() {
        list.sort_by(|&p, &q| {
            let kp = (xs[p].chord_on(cu), xs[p].param_on(cu));
            let kq = (xs[q].chord_on(cu), xs[q].param_on(cu));
            kp.cmp(&kq)
        });
    }
    per_curve
}

/// An arc of a curve between two crossings: the chord of the start
/// crossing, the number of boundary passages, and the direction.
#[derive(Clone, Copy, Debug)]
struct Arc {
    from_chord: usize,
    steps: usize,
    forward: bool,
}

/// Steps of the forward arc between consecutive crossings X -> Y on `curve`.
fn forward_arc(xs: &[Xing], curve: usize, x_id: usize, y_id: usize, nchords: usize) -> Arc {
    let i = xs[x_id].chord_on(curve);
    let j = xs[y_id].chord_on(curve);
    let steps = if i != j {
        (j + nchords - i) % nchords
    } else if xs[x_id].param_on(curve) < xs[y_id].param_on(curve) {
        0
    } else {
        nchords
    };
    Arc {
        from_chord: i,
        steps,
        forward: true,
    }
}

/// Steps of the backward arc from X back to Y on `curve`.
fn backward_arc(xs: &[Xing], curve: usize, x_id: usize, y_id: usize, nchords: usize) -> Arc {
    let i = xs[x_id].chord_on(curve);
    let j = xs[y_id].chord_on(curve);
    let steps = if i != j {
        (i + nchords - j) % nchords
    } else if xs[x_id].param_on(curve) > xs[y_id].param_on(curve) {
        0
    } else {
        nchords
    };
    Arc {
        from_chord: i,
        steps,
        forward: false,
    }
}

fn arc_word(cfg: &Config, curve: usize, arc: Arc) -> Vec<i32> {
    if arc.forward {
        cfg.arc_word_forward(curve, arc.from_chord, arc.steps)
    } else {
        cfg.arc_word_backward(curve, arc.from_chord, arc.steps)
    }
}

/// A candidate bigon: crossings X, Y adjacent along both curves.
struct Candidate {
    a_curve: usize,
    b_curve: usize,
    /// Arc X -> Y along the a-curve (always forward, crossing-free).
    a_arc: Arc,
    /// Arc X -> Y along the b-curve (crossing-free direction).
    b_arc: Arc,
}

fn candidates(cfg: &Config, xs: &[Xing], order: &[Vec<usize>]) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (cu, list) in order.iter().enumerate() {
        let n = list.len();
        if n < 2 {
            continue;
        }
        let nchords = cfg.curves[cu].chords.len();
        for k in 0..n {
            let x_id = list[k];
            let y_id = list[(k + 1) % n];
            if x_id == y_id {
                continue;
            }
            let co = xs[x_id].other_curve(cu);
            if xs[y_id].other_curve(cu) != co {
                continue;
            }
            let olist = &order[co];
            let m = olist.len();
            let xi = olist.iter().position(|&i| i == x_id).unwrap();
            let yi = olist.iter().position(|&i| i == y_id).unwrap();
            let mut dirs = Vec::new();
            if (xi + 1) % m == yi {
                dirs.push(true);
            }
            if (yi + 1) % m == xi {
                dirs.push(false);
            }
            let ochords = cfg.curves[co].chords.len();
            for fwd in dirs {
                let b_arc = if fwd {
                    forward_arc(xs, co, x_id, y_id, ochords)
                } else {
                    backward_arc(xs, co, x_id, y_id, ochords)
                };
                out.push(Candidate {
                    a_curve: cu,
                    b_curve: co,
                    a_arc: forward_arc(xs, cu, x_id, y_id, nchords),
                    b_arc,
                });
            }
        }
    }
    out
}

/// Loop word of a candidate: X -> Y along a, then Y -> X along b.
fn bigon_word(cfg: &Config, c: &Candidate) -> Vec<i32> {
    let wa = arc_word(cfg, c.a_curve, c.a_arc);
    let wb = arc_word(cfg, c.b_curve, c.b_arc);
    words::concat(&wa, &words::inverse(&wb))
}

/// Reroute the a-curve across the bigon, parallel to the b-arc. Returns
/// true when the move commits; on failure the configuration is unchanged.
fn try_reroute(cfg: &mut Config, c: &Candidate, first_after: bool, old_crossings: usize) -> bool {
    let saved = cfg.clone();
    let a_chords = cfg.curves[c.a_curve].chords.clone();
    let b_chords = cfg.curves[c.b_curve].chords.clone();
    let an = a_chords.len();
    let bn = b_chords.len();

    // Passages of the b-arc from X to Y: (leave polygon at, re-enter at).
    let mut passages: Vec<(PointId, PointId)> = Vec::new();
    {
        let mut k = c.b_arc.from_chord;
        for _ in 0..c.b_arc.steps {
            if c.b_arc.forward {
                let k2 = (k + 1) % bn;
                passages.push((b_chords[k].p_out, b_chords[k2].p_in));
                k = k2;
            } else {
                let k2 = (k + bn - 1) % bn;
                passages.push((b_chords[k].p_in, b_chords[k2].p_out));
                k = k2;
            }
        }
    }

    // Dead points: every passage of the replaced a-arc.
    let mut dead: Vec<PointId> = Vec::new();
    {
        let mut k = c.a_arc.from_chord;
        for _ in 0..c.a_arc.steps {
            let k2 = (k + 1) % an;
            dead.push(a_chords[k].p_out);
            dead.push(a_chords[k2].p_in);
            k = k2;
        }
    }

    if passages.is_empty() && c.a_arc.steps == 0 {
        // Two crossings of the same pair of straight chords cannot happen.
        return false;
    }

    // Insert the parallel track. Placement of the first point is the free
    // choice; later placements are forced by staying parallel to the
    // b-chords between passages.
    let mut track: Vec<(PointId, PointId)> = Vec::new(); // (n_i, n_i')
    let mut placement = first_after;
    for (step, &(leave, enter)) in passages.iter().enumerate() {
        if step > 0 {
            let prev_enter = passages[step - 1].1;
            let guide = Chord {
                p_in: prev_enter,
                p_out: leave,
            };
            let prev_track_enter = track[step - 1].1;
            // Pick the placement whose track chord does not cross the guide.
            let mut chosen = None;
            for cand in [false, true] {
                let probe = cfg.insert_point(leave, cand, usize::MAX);
                cfg.reindex();
                let ok = !cfg.chords_cross(
                    Chord {
                        p_in: prev_track_enter,
                        p_out: probe,
                    },
                    guide,
                );
                cfg.kill_point(probe);
                cfg.points.pop();
                cfg.reindex();
                if ok {
                    chosen = Some(cand);
                    break;
                }
            }
            match chosen {
                Some(p) => placement = p,
                None => {
                    *cfg = saved;
                    return false;
                }
            }
        }
        let n1 = cfg.insert_point(leave, placement, usize::MAX);
        let n2 = cfg.insert_point(enter, !placement, n1);
        cfg.points[n1].partner = n2;
        track.push((n1, n2));
    }
    cfg.reindex();

    // Assemble the new chord cycle.
    let keep_start = a_chords[c.a_arc.from_chord].p_in;
    let end_chord = (c.a_arc.from_chord + c.a_arc.steps) % an;
    let keep_end = a_chords[end_chord].p_out;
    let mut new_chords: Vec<Chord> = Vec::new();
    if c.a_arc.steps == an && c.a_arc.from_chord == end_chord {
        // The retained part is a sub-segment of one chord: the track closes
        // through it.
        if track.is_empty() {
            *cfg = saved;
            return false;
        }
        for s in 0..track.len() {
            let nxt = (s + 1) % track.len();
            new_chords.push(Chord {
                p_in: track[s].1,
                p_out: track[nxt].0,
            });
        }
    } else {
        // Track from X to Y, then the retained a-chords.
        let mut prev = keep_start;
        for &(n1, n2) in &track {
            new_chords.push(Chord {
                p_in: prev,
                p_out: n1,
            });
            prev = n2;
        }
        new_chords.push(Chord {
            p_in: prev,
            p_out: keep_end,
        });
        let mut k = (end_chord + 1) % an;
        while k != c.a_arc.from_chord {
            new_chords.push(a_chords[k]);
            k = (k + 1) % an;
        }
    }

    for &pid in &dead {
        cfg.kill_point(pid);
    }
    cfg.reindex();
    cfg.curves[c.a_curve].chords = new_chords;

    if cfg.assert_consistent().is_err()
        || cfg.same_system_violation()
        || cfg.crossing_count() >= old_crossings
    {
        *cfg = saved;
        return false;
    }
    true
}

/// Reduce to minimal position in the closed surface. Returns the final
/// crossing count between the systems.
pub fn reduce_to_minimal(cfg: &mut Config) -> Result<usize> {
    loop {
        let xs = cfg.crossings();
        if xs.is_empty() {
            return Ok(0);
        }
        let old = xs.len();
        let order = order_along_curves(&xs, cfg.curves.len());
        let cands = candidates(cfg, &xs, &order);
        let mut progressed = false;
        for c in &cands {
            let w = bigon_word(cfg, c);
            if !words::is_trivial_surface(&w, cfg.genus) {
                continue;
            }
            if try_reroute(cfg, c, false, old) || try_reroute(cfg, c, true, old) {
                progressed = true;
                break;
            }
        }
        if !progressed {
            return Ok(old);
        }
    }
}

/// Brute-force geometric intersection number in the closed surface.
pub fn intersection_oracle(a: &Multicurve, b: &Multicurve) -> Result<u64> {
    a.same_surface(b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(0);
    }
    let mut cfg = Config::build(&[a, b])?;
    let n = reduce_to_minimal(&mut cfg)?;
    Ok(n as u64)
}

/// Minimal-position configuration of two systems, for region analysis.
pub fn minimal_config(a: &Multicurve, b: &Multicurve) -> Result<Config> {
    a.same_surface(b)?;
    let mut cfg = Config::build(&[a, b])?;
    reduce_to_minimal(&mut cfg)?;
    Ok(cfg)
}

/// Configuration of a single system (components already disjoint).
pub fn single_config(a: &Multicurve) -> Result<Config> {
    Config::build(&[a])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::TriangulatedSurface;
    use std::sync::Arc;

    fn surface() -> Arc<TriangulatedSurface> {
        Arc::new(TriangulatedSurface::build(2).unwrap())
    }

    #[test]
    fn vertex_link_word_is_relator_conjugate() {
        let s = surface();
        let x: Vec<u64> = s.vertex_link_coords().to_vec();
        let tr = trace::trace(&s, &x).unwrap();
        assert_eq!(tr.components.len(), 1);
        let w = trace::component_word(&s, &tr.components[0]);
        assert!(words::is_trivial_surface(&w, 2));
        assert!(!words::is_trivial_free(&w));
        let cyc = words::cyclic_reduce(words::free_reduce(&w));
        assert_eq!(cyc.len(), 8, "link word should be a relator cycle, got {cyc:?}");
    }

    #[test]
    fn exit_words_of_partner_sides_are_inverse() {
        for g in 2..=3 {
            let ws = words::side_exit_words(g);
            for (j, w) in ws.iter().enumerate() {
                let jp = words::polygon_partner_side(j);
                assert_eq!(words::concat(w, &ws[jp]), Vec::<i32>::new());
            }
        }
    }
}
