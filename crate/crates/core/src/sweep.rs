//! Guard points on the auxiliary unit circles.
//!
//! Each axis point other than the top one owes a pair of guard points to a
//! sweep construction: a line tangent to the unit minimal disk rotates from
//! the tangent through the axis point until it meets a designated tangent
//! disk or the polygon inside a quadrant-spanning quadrilateral, and a
//! parallel axis-aligned line sweeps from the center until it meets the
//! polygon inside the auxiliary circle. The guard is the lower (resp.
//! higher, by symmetry) of the two stopped intersections with the auxiliary
//! circle.
//!
//! Everything is computed in a single canonical orientation (the plus sweep
//! at the first axis point) and conjugated by the orthogonal map carrying
//! that setup to each of the six required cases. The top axis point's pair
//! is fixed at `(-1, 1)` and `(1, 1)`.

use crate::error::Result;
use crate::frame::{wedge_corner_coordinate, Frame};
use crate::geodesic::{root_at, GeodesicDisk, RootedSource};
use crate::kernel::{segments_touch, Point2, Segment2, SimplePolygon, Triangulation};
use crate::scalar::Scalar;
use crate::tol;

/// One guard point in frame coordinates.
#[derive(Debug, Clone, Copy)]
pub struct GuardPoint<S> {
    pub point: Point2<S>,
    /// True when the tangent sweep ran to its angular limit without meeting
    /// either stop obstacle (the guard defaults to the limit intersection).
    pub from_limit: bool,
}

/// The eight guard points, indexed by zero-based axis point.
#[derive(Debug, Clone)]
pub struct GuardPoints<S> {
    pub plus: [GuardPoint<S>; 4],
    pub minus: [GuardPoint<S>; 4],
}

/// Center of the auxiliary unit circle for a zero-based axis index.
pub fn aux_center<S: Scalar>(i: usize) -> Point2<S> {
    let one = S::one();
    let z = S::zero();
    match i {
        0 => Point2::new(one, z),
        1 => Point2::new(z, one),
        2 => Point2::new(-one, z),
        _ => Point2::new(z, -one),
    }
}

/// Orthogonal conjugation carrying the canonical setup into frame
/// coordinates; entries are the row-major 2x2 matrix.
#[derive(Debug, Clone, Copy)]
struct Conj<S> {
    m: [S; 4],
}

impl<S: Scalar> Conj<S> {
    fn apply(&self, p: Point2<S>) -> Point2<S> {
        Point2::new(
            self.m[0] * p.x + self.m[1] * p.y,
            self.m[2] * p.x + self.m[3] * p.y,
        )
    }

    /// Inverse of an orthogonal matrix is its transpose.
    fn unapply(&self, p: Point2<S>) -> Point2<S> {
        Point2::new(
            self.m[0] * p.x + self.m[2] * p.y,
            self.m[1] * p.x + self.m[3] * p.y,
        )
    }
}

/// (axis index, is_plus) -> (conjugation, stop-disk role).
fn case_table<S: Scalar>(axis: usize, plus: bool) -> (Conj<S>, usize) {
    let one = S::one();
    let z = S::zero();
    match (axis, plus) {
        (0, true) => (
            Conj {
                m: [one, z, z, one],
            },
            2,
        ),
        (0, false) => (
            Conj {
                m: [one, z, z, -one],
            },
            0,
        ),
        (2, true) => (
            Conj {
                m: [-one, z, z, -one],
            },
            0,
        ),
        (2, false) => (
            Conj {
                m: [-one, z, z, one],
            },
            1,
        ),
        (3, true) => (
            Conj {
                m: [z, one, -one, z],
            },
            1,
        ),
        (3, false) => (
            Conj {
                m: [z, -one, -one, z],
            },
            2,
        ),
        _ => unreachable!("axis 1 has fixed guard points"),
    }
}

/// Context shared by the six sweeps: the polygon in frame coordinates and
/// distance oracles for the three tangent disks.
struct SweepCtx<'a, S: Scalar> {
    poly: &'a SimplePolygon<S>,
    tri: &'a Triangulation,
    frame: &'a Frame<S>,
    frame_edges: Vec<(Point2<S>, Point2<S>)>,
    role_disks: [GeodesicDisk<S>; 3],
    role_sources: [RootedSource<S>; 3],
}

impl<'a, S: Scalar> SweepCtx<'a, S> {
    /// Geodesic membership of a frame-coordinate point in the role disk.
    fn disk_contains_frame_point(&self, role: usize, pf: Point2<S>) -> Result<bool> {
        let pw = self.frame.to_world(pf);
        let disk = &self.role_disks[role];
        let euclid = pw.dist(disk.center);
        if euclid > disk.radius {
            return Ok(false);
        }
        if self
            .poly
            .segment_in_polygon_unchecked(Segment2::new(pw, disk.center))
        {
            return Ok(true);
        }
        let d = self.role_sources[role].distance_to(self.poly, self.tri, pw)?;
        Ok(d <= disk.radius)
    }

    /// Lower bound check: the whole (world) chord stays clear of the disk.
    fn chord_clear_of_disk(&self, role: usize, a: Point2<S>, b: Point2<S>) -> bool {
        let disk = &self.role_disks[role];
        let aw = self.frame.to_world(a);
        let bw = self.frame.to_world(b);
        disk.center.dist_to_segment(aw, bw) > disk.radius
    }
}

/// Computes all eight guard points for a frame.
pub fn sweep_guard_points<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
    frame: &Frame<S>,
    frame_poly: &SimplePolygon<S>,
) -> Result<GuardPoints<S>> {
    let role_disks = [
        disks[frame.disk_indices[0]],
        disks[frame.disk_indices[1]],
        disks[frame.disk_indices[2]],
    ];
    let role_sources = [
        root_at(poly, tri, role_disks[0].center)?,
        root_at(poly, tri, role_disks[1].center)?,
        root_at(poly, tri, role_disks[2].center)?,
    ];
    let ctx = SweepCtx {
        poly,
        tri,
        frame,
        frame_edges: frame_poly.edges().collect(),
        role_disks,
        role_sources,
    };

    let one = S::one();
    let fixed_plus = GuardPoint {
        point: Point2::new(-one, one),
        from_limit: false,
    };
    let fixed_minus = GuardPoint {
        point: Point2::new(one, one),
        from_limit: false,
    };
    let mut plus = [fixed_plus; 4];
    let mut minus = [fixed_minus; 4];
    for axis in [0usize, 2, 3] {
        plus[axis] = canonical_sweep(&ctx, axis, true)?;
        minus[axis] = canonical_sweep(&ctx, axis, false)?;
    }
    Ok(GuardPoints { plus, minus })
}

/// Canonical tangent line at touch angle `theta`: anchor on the unit circle,
/// direction counterclockwise.
fn tangent_line<S: Scalar>(theta: S) -> (Point2<S>, Point2<S>) {
    let (sin, cos) = theta.sin_cos();
    (Point2::new(cos, sin), Point2::new(-sin, cos))
}

/// Intersection of the canonical tangent line with the auxiliary circle
/// centered at (1, 0), on the upper arc (the canonical guard side).
fn tangent_aux_intersection<S: Scalar>(theta: S) -> Point2<S> {
    let (anchor, dir) = tangent_line(theta);
    let c = theta.cos().max(S::zero());
    // The sweep limit is a double root; the quadratic solve loses half the
    // digits there, so collapse it explicitly.
    let disc = if c <= S::lit(1e-12) {
        S::zero()
    } else {
        (c * (S::two() - c)).sqrt()
    };
    let t = -theta.sin() + disc;
    anchor + dir * t
}

/// One conjugated sweep: returns the guard point in frame coordinates.
fn canonical_sweep<S: Scalar>(ctx: &SweepCtx<S>, axis: usize, plus: bool) -> Result<GuardPoint<S>> {
    let (conj, stop_role) = case_table::<S>(axis, plus);

    // Polygon edges in canonical coordinates.
    let edges: Vec<(Point2<S>, Point2<S>)> = ctx
        .frame_edges
        .iter()
        .map(|&(a, b)| (conj.unapply(a), conj.unapply(b)))
        .collect();

    let theta_start = -S::PI() / S::lit(3.0);
    let theta_limit = S::FRAC_PI_2();

    let obstructed = |theta: S| -> Result<bool> {
        let Some((a, b)) = quad_chord(theta) else {
            return Ok(false);
        };
        // Polygon contact inside the quadrilateral.
        for &(u, v) in &edges {
            if segments_touch(a, b, u, v) {
                return Ok(true);
            }
        }
        // Stop-disk contact along the chord.
        let (fa, fb) = (conj.apply(a), conj.apply(b));
        if ctx.chord_clear_of_disk(stop_role, fa, fb) {
            return Ok(false);
        }
        let n = tol::SWEEP_CHORD_SAMPLES;
        for k in 0..=n {
            let t = S::from_usize(k).unwrap() / S::from_usize(n).unwrap();
            let p = a.lerp(b, t);
            if ctx.disk_contains_frame_point(stop_role, conj.apply(p))? {
                return Ok(true);
            }
        }
        Ok(false)
    };

    // Bracket the first obstructed angle on a coarse grid, then bisect.
    let grid = 64usize;
    let theta_stop: S;
    let mut from_limit = false;
    if obstructed(theta_start)? {
        theta_stop = theta_start;
    } else {
        let mut lo = theta_start;
        let mut hit = None;
        for k in 1..=grid {
            let th = theta_start
                + (theta_limit - theta_start) * S::from_usize(k).unwrap()
                    / S::from_usize(grid).unwrap();
            if obstructed(th)? {
                hit = Some(th);
                break;
            }
            lo = th;
        }
        match hit {
            Some(mut hi) => {
                while hi - lo > S::lit(tol::SWEEP_ANGLE_RES) {
                    let mid = (lo + hi) * S::half();
                    if obstructed(mid)? {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                theta_stop = (lo + hi) * S::half();
            }
            None => {
                from_limit = true;
                theta_stop = theta_limit;
            }
        }
    }
    let u = tangent_aux_intersection(theta_stop);

    // Axis-parallel sweep: first polygon contact strictly inside the
    // auxiliary circle, in canonical coordinates the horizontal line rising
    // from the center.
    let stop_y = horizontal_stop(&edges);
    let w = Point2::new(
        S::one() + (S::one() - stop_y * stop_y).max(S::zero()).sqrt(),
        stop_y,
    );

    // Canonical selection: the lower of the two stopped intersections.
    let chosen = if u.y <= w.y { u } else { w };
    Ok(GuardPoint {
        point: conj.apply(chosen),
        from_limit,
    })
}

/// Clips the canonical tangent line at `theta` to the quadrilateral spanned
/// by the origin, the first axis point, the first wedge corner and the
/// second axis point. Returns the chord endpoints, if any.
fn quad_chord<S: Scalar>(theta: S) -> Option<(Point2<S>, Point2<S>)> {
    let a = wedge_corner_coordinate::<S>();
    let two = S::two();
    let z = S::zero();
    let quad = [
        Point2::new(z, z),
        Point2::new(two, z),
        Point2::new(a, a),
        Point2::new(z, two),
    ];
    let (anchor, dir) = tangent_line(theta);
    let mut t_lo = S::lit(-1e6);
    let mut t_hi = S::lit(1e6);
    for k in 0..4 {
        let (p, q) = (quad[k], quad[(k + 1) % 4]);
        // Quad is counterclockwise: inside means left of each edge.
        let n = (q - p).perp();
        let denom = n.dot(dir);
        let num = n.dot(p - anchor);
        if denom.abs() <= S::lit(1e-15) {
            if n.dot(anchor - p) < z {
                return None;
            }
            continue;
        }
        let t = num / denom;
        if denom > z {
            t_lo = t_lo.max(t);
        } else {
            t_hi = t_hi.min(t);
        }
    }
    if t_lo >= t_hi {
        return None;
    }
    Some((anchor + dir * t_lo, anchor + dir * t_hi))
}

/// Lowest non-negative height at which the polygon enters the open canonical
/// auxiliary circle; 1 when it never does.
fn horizontal_stop<S: Scalar>(edges: &[(Point2<S>, Point2<S>)]) -> S {
    let center = Point2::new(S::one(), S::zero());
    let mut stop = S::one();
    for &(p, q) in edges {
        let d = q - p;
        let f = p - center;
        let qa = d.norm2();
        let qb = S::two() * f.dot(d);
        let qc = f.norm2() - S::one();
        let disc = qb * qb - S::lit(4.0) * qa * qc;
        if disc <= S::zero() || qa <= S::zero() {
            continue;
        }
        let sq = disc.sqrt();
        let t0 = ((-qb - sq) / (S::two() * qa)).max(S::zero());
        let t1 = ((-qb + sq) / (S::two() * qa)).min(S::one());
        if t0 >= t1 {
            continue;
        }
        let (y0, y1) = ((p + d * t0).y, (p + d * t1).y);
        let (ylo, yhi) = (y0.min(y1), y0.max(y1));
        if yhi < S::zero() {
            continue;
        }
        stop = stop.min(ylo.max(S::zero()));
    }
    stop
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangent_intersection_endpoints() {
        // At the start angle the line passes through the axis point itself;
        // at the limit it grazes the top of the auxiliary circle.
        let start: Point2<f64> = tangent_aux_intersection(-std::f64::consts::FRAC_PI_3);
        assert!(start.dist(Point2::of(2.0, 0.0)) < 1e-12);
        let end: Point2<f64> = tangent_aux_intersection(std::f64::consts::FRAC_PI_2);
        assert!(end.dist(Point2::of(1.0, 1.0)) < 1e-12);
    }

    #[test]
    fn quad_chord_present_mid_sweep() {
        let (a, b) = quad_chord(0.3f64).unwrap();
        // Chord endpoints on the tangent line, distance one from origin.
        for p in [a, b] {
            let d = p.x * 0.3f64.cos() + p.y * 0.3f64.sin();
            assert!((d - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn horizontal_stop_against_wall() {
        // A wall crossing the auxiliary circle at height 0.5 stops the sweep
        // there; the guard formula gives (1 + sqrt(1 - 0.25), 0.5).
        let edges = vec![(Point2::of(-3.0, 0.5), Point2::of(3.0, 0.5))];
        let stop: f64 = horizontal_stop(&edges);
        assert!((stop - 0.5).abs() < 1e-12);
        let w: Point2<f64> = Point2::of(1.0 + (1.0f64 - 0.25).sqrt(), stop);
        assert!((w.x - 1.8660254037844386).abs() < 1e-12);
        // No obstruction: the sweep caps at height one.
        let none: Vec<(Point2<f64>, Point2<f64>)> = Vec::new();
        let free: f64 = horizontal_stop(&none);
        assert!((free - 1.0).abs() < 1e-15);
        // Obstruction below the axis does not stop the upward sweep.
        let below = vec![(Point2::of(-3.0, -0.5), Point2::of(3.0, -0.5))];
        let s2: f64 = horizontal_stop(&below);
        assert!((s2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn conjugations_are_orthogonal_involutions_on_round_trip() {
        for (axis, plus) in [
            (0, true),
            (0, false),
            (2, true),
            (2, false),
            (3, true),
            (3, false),
        ] {
            let (c, role) = case_table::<f64>(axis, plus);
            assert!(role < 3);
            let p = Point2::of(0.37, -1.21);
            let q = c.unapply(c.apply(p));
            assert!(q.dist(p) < 1e-15);
            // The canonical guard arc lands in the expected quadrant:
            // plus guards in the axis quadrant, minus guards one before.
            let arc_point = c.apply(Point2::of(1.3, 0.6));
            let expected = match (axis, plus) {
                (0, true) => (1, 1),
                (0, false) => (1, -1),
                (2, true) => (-1, -1),
                (2, false) => (-1, 1),
                (3, true) => (1, -1),
                (3, false) => (-1, -1),
                _ => unreachable!(),
            };
            assert!(
                arc_point.x * expected.0 as f64 > 0.0,
                "axis {axis} plus {plus}"
            );
            assert!(
                arc_point.y * expected.1 as f64 > 0.0,
                "axis {axis} plus {plus}"
            );
        }
    }
}
