//! Geodesic triangles and their cores (pseudo-triangles).

use super::{shortest_path, GeodesicPath};
use crate::error::{Error, Result};
use crate::kernel::{Point2, SimplePolygon, Triangulation};
use crate::scalar::Scalar;
use crate::tol;

/// The geodesic core of three points: the pseudo-triangle left after
/// trimming the shared prefixes of the three pairwise geodesics at their
/// divergence points.
#[derive(Debug, Clone)]
pub struct GeodesicCore<S> {
    /// Divergence apexes, one per input point.
    pub apexes: [Point2<S>; 3],
    /// Sides joining apex 0 to 1, 1 to 2 and 2 to 0.
    pub sides: [Vec<Point2<S>>; 3],
}

impl<S: Scalar> GeodesicCore<S> {
    /// Closed boundary polyline, first point repeated at the end.
    pub fn boundary(&self) -> Vec<Point2<S>> {
        let mut out: Vec<Point2<S>> = Vec::new();
        for side in &self.sides {
            for &p in side {
                if out.last().is_none_or(|&q| q != p) {
                    out.push(p);
                }
            }
        }
        if out.first() != out.last() {
            let first = out[0];
            out.push(first);
        }
        out
    }

    /// Point-in-weakly-simple-polygon test on the core boundary; boundary
    /// points count as inside.
    pub fn contains(&self, p: Point2<S>) -> bool {
        let boundary = self.boundary();
        let eps = S::lit(tol::EPS_GEOM) * scale_of(&boundary);
        for w in boundary.windows(2) {
            if p.dist_to_segment(w[0], w[1]) <= eps {
                return true;
            }
        }
        winding_number(&boundary, p) != 0
    }
}

fn scale_of<S: Scalar>(pts: &[Point2<S>]) -> S {
    let mut m = S::one();
    for p in pts {
        m = m.max(p.x.abs()).max(p.y.abs());
    }
    m
}

/// Winding number of a closed polyline around `p` (first == last point).
pub fn winding_number<S: Scalar>(closed: &[Point2<S>], p: Point2<S>) -> i32 {
    let mut wn = 0i32;
    for w in closed.windows(2) {
        let (a, b) = (w[0], w[1]);
        let cross = (b - a).cross(p - a);
        if a.y <= p.y {
            if b.y > p.y && cross > S::zero() {
                wn += 1;
            }
        } else if b.y <= p.y && cross < S::zero() {
            wn -= 1;
        }
    }
    wn
}

/// Builds the geodesic core of `a`, `b`, `c`.
///
/// Errors with `GeodesicallyCollinear` when one of the points lies on the
/// geodesic of the other two.
pub fn geodesic_core<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    a: Point2<S>,
    b: Point2<S>,
    c: Point2<S>,
) -> Result<GeodesicCore<S>> {
    let ab = shortest_path(poly, tri, a, b)?;
    let bc = shortest_path(poly, tri, b, c)?;
    let ca = shortest_path(poly, tri, c, a)?;

    let eps = S::lit(tol::EPS_GEOM) * scale_of(&[a, b, c]).max(poly.diameter());
    // Collinearity via length additivity on each permutation.
    if (ab.length + bc.length - ca.length).abs() <= eps
        || (bc.length + ca.length - ab.length).abs() <= eps
        || (ca.length + ab.length - bc.length).abs() <= eps
    {
        return Err(Error::GeodesicallyCollinear);
    }

    let ba = ab.reversed();
    let cb = bc.reversed();
    let ac = ca.reversed();

    let apex_a = divergence_point(&ab, &ac);
    let apex_b = divergence_point(&bc, &ba);
    let apex_c = divergence_point(&ca, &cb);

    let side_ab = slice_between(&ab, apex_a, apex_b);
    let side_bc = slice_between(&bc, apex_b, apex_c);
    let side_ca = slice_between(&ca, apex_c, apex_a);

    Ok(GeodesicCore {
        apexes: [apex_a, apex_b, apex_c],
        sides: [side_ab, side_bc, side_ca],
    })
}

/// Walks two paths out of a common source until their directions split;
/// returns the divergence point (which lies on both paths).
fn divergence_point<S: Scalar>(p1: &GeodesicPath<S>, p2: &GeodesicPath<S>) -> Point2<S> {
    let w1 = &p1.waypoints;
    let w2 = &p2.waypoints;
    debug_assert_eq!(w1[0], w2[0]);
    let mut cur = w1[0];
    let mut i = 1usize;
    let mut j = 1usize;
    loop {
        if i >= w1.len() || j >= w2.len() {
            return cur;
        }
        let d1 = w1[i] - cur;
        let d2 = w2[j] - cur;
        let (l1, l2) = (d1.norm(), d2.norm());
        if l1 <= S::zero() {
            i += 1;
            continue;
        }
        if l2 <= S::zero() {
            j += 1;
            continue;
        }
        let same_dir =
            d1.cross(d2).abs() <= S::lit(tol::EPS_GEOM) * l1 * l2 && d1.dot(d2) > S::zero();
        if !same_dir {
            return cur;
        }
        if (l1 - l2).abs() <= S::lit(tol::EPS_GEOM) * l1.max(l2) {
            cur = w1[i];
            i += 1;
            j += 1;
        } else if l1 < l2 {
            cur = w1[i];
            i += 1;
        } else {
            cur = w2[j];
            j += 1;
        }
    }
}

/// Sub-polyline of `path` between two points that lie on it, `from`
/// occurring not later than `to`.
fn slice_between<S: Scalar>(
    path: &GeodesicPath<S>,
    from: Point2<S>,
    to: Point2<S>,
) -> Vec<Point2<S>> {
    let t0 = param_on_polyline(&path.waypoints, from);
    let t1 = param_on_polyline(&path.waypoints, to);
    debug_assert!(t0 <= t1 + S::lit(tol::EPS_GEOM));
    let mut out = vec![from];
    let mut acc = S::zero();
    for w in path.waypoints.windows(2) {
        let len = w[0].dist(w[1]);
        let end = acc + len;
        if end > t0 && acc < t1 {
            let p = w[1];
            if end <= t1 && out.last().is_none_or(|&q| q.dist(p) > S::zero()) {
                out.push(p);
            }
        }
        acc = end;
    }
    if out.last().is_none_or(|&q| q.dist(to) > S::zero()) {
        out.push(to);
    }
    out
}

/// Arc-length parameter of a point known to lie on the polyline.
fn param_on_polyline<S: Scalar>(pts: &[Point2<S>], p: Point2<S>) -> S {
    let mut best = S::infinity();
    let mut best_t = S::zero();
    let mut acc = S::zero();
    for w in pts.windows(2) {
        let seg = w[1] - w[0];
        let len2 = seg.norm2();
        let t = if len2 > S::zero() {
            ((p - w[0]).dot(seg) / len2).max(S::zero()).min(S::one())
        } else {
            S::zero()
        };
        let q = w[0] + seg * t;
        let d = q.dist(p);
        if d < best {
            best = d;
            best_t = acc + seg.norm() * t;
        }
        acc = acc + seg.norm();
    }
    best_t
}
