//! Geodesic shortest paths, distances, disks and cores inside a simple
//! polygon.
//!
//! Paths are computed with the funnel algorithm over the sleeve of
//! triangles between the two query points; the sleeve comes from the
//! triangulation's dual tree, which is rooted once per repeated source so
//! batch queries stay linear.

mod funnel;
mod region;

pub use region::{geodesic_core, GeodesicCore};

use crate::error::{Error, Result};
use crate::kernel::{Line2, Point2, PointLocation, SimplePolygon, Triangulation};
use crate::scalar::Scalar;
use crate::tol;

/// A geodesic shortest path: a polyline from source to target whose interior
/// waypoints are reflex polygon vertices.
#[derive(Debug, Clone)]
pub struct GeodesicPath<S> {
    pub waypoints: Vec<Point2<S>>,
    pub length: S,
}

impl<S: Scalar> GeodesicPath<S> {
    fn from_waypoints(waypoints: Vec<Point2<S>>) -> Self {
        let length = polyline_length(&waypoints);
        GeodesicPath { waypoints, length }
    }

    pub fn source(&self) -> Point2<S> {
        self.waypoints[0]
    }

    pub fn target(&self) -> Point2<S> {
        *self.waypoints.last().unwrap()
    }

    /// Point at arc length `d` from the source, clamped to the path.
    pub fn point_at(&self, d: S) -> Point2<S> {
        let mut remaining = d.max(S::zero());
        for w in self.waypoints.windows(2) {
            let seg = w[1] - w[0];
            let len = seg.norm();
            if remaining <= len {
                if len <= S::zero() {
                    return w[0];
                }
                return w[0] + seg * (remaining / len);
            }
            remaining = remaining - len;
        }
        self.target()
    }

    /// Direction of travel at arc length `d` from the source.
    pub fn direction_at(&self, d: S) -> Point2<S> {
        let mut remaining = d.max(S::zero());
        for w in self.waypoints.windows(2) {
            let seg = w[1] - w[0];
            let len = seg.norm();
            if (remaining <= len || w[1] == self.target()) && len > S::zero() {
                return seg / len;
            }
            remaining = remaining - len;
        }
        Point2::new(S::one(), S::zero())
    }

    pub fn reversed(&self) -> Self {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        GeodesicPath {
            waypoints,
            length: self.length,
        }
    }
}

fn polyline_length<S: Scalar>(pts: &[Point2<S>]) -> S {
    let mut acc = S::zero();
    for w in pts.windows(2) {
        acc = acc + w[0].dist(w[1]);
    }
    acc
}

/// A geodesic disk: all points within geodesic distance `radius` of
/// `center`.
#[derive(Debug, Clone, Copy)]
pub struct GeodesicDisk<S> {
    pub center: Point2<S>,
    pub radius: S,
}

impl<S: Scalar> GeodesicDisk<S> {
    pub fn new(center: Point2<S>, radius: S) -> Result<Self> {
        if radius <= S::zero() || radius.is_nan() || !radius.is_finite() {
            return Err(Error::NonPositiveRadius(radius.as_f64()));
        }
        Ok(GeodesicDisk { center, radius })
    }

    /// Membership test with slack `tol`.
    pub fn contains(
        &self,
        poly: &SimplePolygon<S>,
        tri: &Triangulation,
        p: Point2<S>,
        tolerance: S,
    ) -> Result<bool> {
        let d = geodesic_distance(poly, tri, self.center, p)?;
        Ok(d <= self.radius + tolerance)
    }
}

/// A source point with the dual tree rooted at its triangle, for repeated
/// distance queries.
#[derive(Debug, Clone)]
pub struct RootedSource<S> {
    pub source: Point2<S>,
    tri_idx: usize,
    parent: Vec<Option<usize>>,
    parent_portal: Vec<Option<(usize, usize)>>,
}

/// Roots the dual tree at the triangle containing `source`.
pub fn root_at<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    source: Point2<S>,
) -> Result<RootedSource<S>> {
    let tri_idx = tri.locate(poly, source).ok_or(Error::PointOutsidePolygon)?;
    let n = tri.triangles.len();
    let mut parent = vec![None; n];
    let mut parent_portal = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[tri_idx] = true;
    queue.push_back(tri_idx);
    while let Some(t) = queue.pop_front() {
        for (k, nb) in tri.neighbors[t].iter().enumerate() {
            if let Some(n2) = *nb {
                if !seen[n2] {
                    seen[n2] = true;
                    parent[n2] = Some(t);
                    let a = tri.triangles[t][k];
                    let b = tri.triangles[t][(k + 1) % 3];
                    parent_portal[n2] = Some((a, b));
                    queue.push_back(n2);
                }
            }
        }
    }
    Ok(RootedSource {
        source,
        tri_idx,
        parent,
        parent_portal,
    })
}

impl<S: Scalar> RootedSource<S> {
    /// Shortest path from the rooted source to `target`.
    pub fn path_to(
        &self,
        poly: &SimplePolygon<S>,
        tri: &Triangulation,
        target: Point2<S>,
    ) -> Result<GeodesicPath<S>> {
        let t_idx = tri.locate(poly, target).ok_or(Error::PointOutsidePolygon)?;
        self.path_to_located(poly, tri, target, t_idx)
    }

    /// Same as [`path_to`](Self::path_to) with the target's triangle already
    /// located (batch queries locate once and fan out).
    pub fn path_to_located(
        &self,
        poly: &SimplePolygon<S>,
        _tri: &Triangulation,
        target: Point2<S>,
        t_idx: usize,
    ) -> Result<GeodesicPath<S>> {
        if t_idx == self.tri_idx || self.source == target {
            return Ok(GeodesicPath::from_waypoints(if self.source == target {
                vec![self.source]
            } else {
                vec![self.source, target]
            }));
        }
        // Climb from the target triangle to the root, collecting portals.
        let mut portals: Vec<(usize, usize)> = Vec::new();
        let mut cur = t_idx;
        while cur != self.tri_idx {
            portals.push(self.parent_portal[cur].expect("dual tree is connected"));
            cur = self.parent[cur].expect("dual tree is connected");
        }
        let verts = poly.vertices();
        // A query point sitting exactly on a portal endpoint (vertex queries)
        // crosses that portal for free; such portals carry no constraint and
        // would poison the left/right assignment, so strip them. They can
        // only appear as a prefix (around the target) or a suffix (around
        // the source), because a vertex's triangle fan is contiguous in the
        // dual tree.
        let touches = |pp: (usize, usize), q: Point2<S>| verts[pp.0] == q || verts[pp.1] == q;
        let mut lo = 0usize;
        while lo < portals.len() && touches(portals[lo], target) {
            lo += 1;
        }
        let mut hi = portals.len();
        while hi > lo && touches(portals[hi - 1], self.source) {
            hi -= 1;
        }
        let mut waypoints =
            funnel::pull_string(target, self.source, &portals[lo..hi], &|i: usize| verts[i]);
        waypoints.reverse();
        Ok(GeodesicPath::from_waypoints(waypoints))
    }

    pub fn distance_to(
        &self,
        poly: &SimplePolygon<S>,
        tri: &Triangulation,
        target: Point2<S>,
    ) -> Result<S> {
        Ok(self.path_to(poly, tri, target)?.length)
    }
}

/// Geodesic shortest path between two points of the polygon.
pub fn shortest_path<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    s: Point2<S>,
    t: Point2<S>,
) -> Result<GeodesicPath<S>> {
    if poly.locate(s) == PointLocation::Outside || poly.locate(t) == PointLocation::Outside {
        return Err(Error::PointOutsidePolygon);
    }
    root_at(poly, tri, s)?.path_to(poly, tri, t)
}

/// Length of the geodesic between two points.
pub fn geodesic_distance<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    s: Point2<S>,
    t: Point2<S>,
) -> Result<S> {
    Ok(shortest_path(poly, tri, s, t)?.length)
}

/// First point of the path (walking from its source) that is visible from
/// the path's target: the waypoint immediately preceding the target, or the
/// source itself for a straight path.
pub fn first_visible_point<S: Scalar>(path: &GeodesicPath<S>) -> Point2<S> {
    let n = path.waypoints.len();
    if n >= 2 {
        path.waypoints[n - 2]
    } else {
        path.waypoints[0]
    }
}

/// Ordered crossing points of the path polyline with an infinite line.
///
/// Touching waypoints produce a single crossing point; callers filter by
/// coordinates when a ray or axis is intended.
pub fn path_crossings_with_line<S: Scalar>(
    path: &GeodesicPath<S>,
    line: Line2<S>,
) -> Vec<Point2<S>> {
    let eps = S::lit(tol::EPS_GEOM);
    let mut out: Vec<Point2<S>> = Vec::new();
    let mut push = |p: Point2<S>| {
        if out.last().is_none_or(|&q| q.dist(p) > eps) {
            out.push(p);
        }
    };
    for w in path.waypoints.windows(2) {
        let (a, b) = (w[0], w[1]);
        let da = line.signed_dist(a);
        let db = line.signed_dist(b);
        if da.abs() <= eps {
            push(a);
            continue;
        }
        if db.abs() <= eps {
            // The endpoint is handled when it opens the next segment, except
            // for the final waypoint.
            if b == path.target() {
                push(b);
            }
            continue;
        }
        if (da > S::zero()) != (db > S::zero()) {
            let t = da / (da - db);
            push(a.lerp(b, t));
        }
    }
    out
}
