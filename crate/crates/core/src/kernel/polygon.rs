//! Simple polygons: validation, point location, segment containment.

use super::point::{Point2, Segment2};
use super::predicates::{collinear_on_segment, orient_sign, segments_cross_properly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tol;

/// Classification of a point against a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// A validated simple polygon with vertices in clockwise order.
#[derive(Debug, Clone)]
pub struct SimplePolygon<S> {
    verts: Vec<Point2<S>>,
    scale: S,
}

impl<S: Scalar> SimplePolygon<S> {
    /// Validates a vertex loop and normalizes it to clockwise order.
    ///
    /// Counterclockwise input is silently reversed. Rejects self-intersecting
    /// loops, repeated vertices and zero-area spikes.
    pub fn validate(vertices: Vec<Point2<S>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices);
        }
        for v in &vertices {
            if !v.is_finite() {
                return Err(Error::NonFiniteCoordinate);
            }
        }
        let eps = S::lit(tol::EPS_GEOM) * Self::scale_of(&vertices);
        for i in 0..n {
            for j in (i + 1)..n {
                if vertices[i].dist(vertices[j]) <= eps {
                    return Err(Error::DegenerateVertex(j));
                }
            }
        }
        // A spike folds the boundary back onto itself.
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            if orient_sign(prev, cur, next) == 0 && (prev - cur).dot(next - cur) > S::zero() {
                return Err(Error::DegenerateVertex(i));
            }
        }
        // Pairwise test over non-adjacent edges.
        for i in 0..n {
            let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
                if segments_cross_properly(a1, a2, b1, b2) {
                    return Err(Error::NotSimple(i, j));
                }
                // Improper contact between non-adjacent edges also breaks
                // simplicity (a vertex exactly on a far edge).
                if touches_non_adjacent(a1, a2, b1, b2) {
                    return Err(Error::NotSimple(i, j));
                }
            }
        }
        let mut verts = vertices;
        if signed_area_ccw(&verts) > S::zero() {
            verts.reverse();
        }
        let scale = Self::scale_of(&verts);
        Ok(SimplePolygon { verts, scale })
    }

    /// Wraps an already-validated vertex loop after an affine similarity
    /// (which preserves simplicity), normalizing orientation only.
    pub fn from_transformed_loop(mut verts: Vec<Point2<S>>) -> Self {
        if signed_area_ccw(&verts) > S::zero() {
            verts.reverse();
        }
        let scale = Self::scale_of(&verts);
        SimplePolygon { verts, scale }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point2<S> {
        self.verts[i % self.verts.len()]
    }

    #[inline]
    pub fn vertices(&self) -> &[Point2<S>] {
        &self.verts
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2<S>, Point2<S>)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }

    /// Unsigned enclosed area.
    pub fn area(&self) -> S {
        signed_area_ccw(&self.verts).abs()
    }

    pub fn bbox(&self) -> (Point2<S>, Point2<S>) {
        let mut lo = self.verts[0];
        let mut hi = self.verts[0];
        for v in &self.verts {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Bounding-box diagonal; the characteristic length of the instance.
    pub fn diameter(&self) -> S {
        let (lo, hi) = self.bbox();
        lo.dist(hi)
    }

    fn scale_of(verts: &[Point2<S>]) -> S {
        let mut m = S::zero();
        for v in verts {
            m = m.max(v.x.abs()).max(v.y.abs());
        }
        m.max(S::one())
    }

    /// Distance from `p` to the polygon boundary.
    pub fn boundary_distance(&self, p: Point2<S>) -> S {
        let mut best = S::infinity();
        for (a, b) in self.edges() {
            best = best.min(p.dist_to_segment(a, b));
        }
        best
    }

    /// Standard point location with boundary tolerance.
    pub fn locate(&self, p: Point2<S>) -> PointLocation {
        let eps = S::lit(tol::EPS_GEOM) * self.scale;
        if self.boundary_distance(p) <= eps {
            return PointLocation::Boundary;
        }
        if self.contains_by_parity(p) {
            PointLocation::Inside
        } else {
            PointLocation::Outside
        }
    }

    /// Crossing-parity test, robust via exact orientation signs. `p` must not
    /// lie on the boundary.
    fn contains_by_parity(&self, p: Point2<S>) -> bool {
        let n = self.verts.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            // Upward-crossing convention handles vertices on the ray once.
            let (lo, hi) = if a.y <= b.y { (a, b) } else { (b, a) };
            if p.y >= lo.y && p.y < hi.y && orient_sign(lo, hi, p) > 0 {
                inside = !inside;
            }
        }
        inside
    }

    /// True when the closed segment lies entirely inside the closed polygon.
    ///
    /// Proper boundary crossings reject the segment; boundary contacts
    /// (vertex touches, collinear overlap with an edge) are allowed as long
    /// as the segment never leaves the closed region. Returns
    /// `EndpointOutside` when an endpoint is strictly outside.
    pub fn segment_in_polygon(&self, seg: Segment2<S>) -> Result<bool> {
        if self.locate(seg.a) == PointLocation::Outside
            || self.locate(seg.b) == PointLocation::Outside
        {
            return Err(Error::EndpointOutside);
        }
        Ok(self.segment_in_polygon_unchecked(seg))
    }

    /// Same containment test without the endpoint precondition: an endpoint
    /// outside the polygon simply yields `false`.
    pub fn segment_in_polygon_unchecked(&self, seg: Segment2<S>) -> bool {
        if seg.a == seg.b {
            return self.locate(seg.a) != PointLocation::Outside;
        }
        let eps = S::lit(tol::EPS_GEOM) * self.scale;
        let len = seg.length();
        let mut contact_params: Vec<S> = Vec::new();
        for (a, b) in self.edges() {
            if segments_cross_properly(seg.a, seg.b, a, b) {
                // A crossing within tolerance of the segment's own endpoint
                // is endpoint contact (the endpoint sits on the boundary up
                // to rounding), not an exit.
                let d = seg.b - seg.a;
                let e = b - a;
                let t = (a - seg.a).cross(e) / d.cross(e);
                if (t.min(S::one() - t) * len).abs() > eps {
                    return false;
                }
                contact_params.push(t);
                continue;
            }
            // Record improper contacts so the gaps between them can be
            // classified.
            for t in contact_parameters(seg, a, b) {
                contact_params.push(t);
            }
        }
        contact_params.push(S::zero());
        contact_params.push(S::one());
        contact_params.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in contact_params.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if t1 - t0 <= S::lit(tol::EPS_UNIT) {
                continue;
            }
            let mid = seg.at((t0 + t1) * S::half());
            if self.locate(mid) == PointLocation::Outside {
                return false;
            }
        }
        true
    }

    /// True when the polygon boundary obstructs the closed segment: the
    /// segment is not contained in the closed polygon.
    pub fn boundary_blocks(&self, seg: Segment2<S>) -> bool {
        !self.segment_in_polygon_unchecked(seg)
    }
}

/// Signed area with the counterclockwise-positive convention.
fn signed_area_ccw<S: Scalar>(verts: &[Point2<S>]) -> S {
    let n = verts.len();
    let mut acc = S::zero();
    for i in 0..n {
        acc = acc + verts[i].cross(verts[(i + 1) % n]);
    }
    acc * S::half()
}

/// Touching test for non-adjacent polygon edges: any shared point at all.
fn touches_non_adjacent<S: Scalar>(
    a1: Point2<S>,
    a2: Point2<S>,
    b1: Point2<S>,
    b2: Point2<S>,
) -> bool {
    for (u, v, w) in [(a1, a2, b1), (a1, a2, b2), (b1, b2, a1), (b1, b2, a2)] {
        if orient_sign(u, v, w) == 0 && collinear_on_segment(u, v, w) {
            return true;
        }
    }
    false
}

/// Parameters t in [0,1] where `seg` touches edge `ab` without a proper
/// crossing.
fn contact_parameters<S: Scalar>(seg: Segment2<S>, a: Point2<S>, b: Point2<S>) -> Vec<S> {
    let mut out = Vec::new();
    let d = seg.b - seg.a;
    let e = b - a;
    let denom = d.cross(e);
    if orient_sign(seg.a, seg.b, a) == 0 && orient_sign(seg.a, seg.b, b) == 0 {
        // Collinear overlap: project the edge endpoints onto the segment.
        let len2 = d.norm2();
        if len2 > S::zero() {
            for p in [a, b] {
                let t = (p - seg.a).dot(d) / len2;
                if t > S::zero() && t < S::one() && collinear_on_segment(seg.a, seg.b, p) {
                    out.push(t);
                }
            }
        }
        return out;
    }
    if denom.abs() > S::zero() {
        let t = (a - seg.a).cross(e) / denom;
        let u = (a - seg.a).cross(d) / denom;
        if t >= S::zero() && t <= S::one() && u >= S::zero() && u <= S::one() {
            out.push(t);
        }
        return out;
    }
    // Parallel but not collinear: endpoints may still coincide.
    for (p, t) in [(seg.a, S::zero()), (seg.b, S::one())] {
        if orient_sign(a, b, p) == 0 && collinear_on_segment(a, b, p) {
            out.push(t);
        }
    }
    out
}
