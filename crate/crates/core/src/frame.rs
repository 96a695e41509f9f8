//! The canonical coordinate frame and its landmark points.
//!
//! The frame is the similarity (plus an optional mirror) that places the
//! minimal disk at the origin with unit radius and the first tangent line
//! horizontal at `y = -1`, with the tangent-line triangle's largest angle
//! at the apex opposite that line. Roles 2 and 3 are assigned so that the
//! second tangent line meets `y = -1` at positive x.
//!
//! All landmark coordinates below live in frame units.

use crate::error::{Error, Result};
use crate::kernel::{Line2, Point2, Segment2, SimplePolygon};
use crate::mindisk::{MinDiskResult, TangencyData};
use crate::scalar::Scalar;

/// Distance constant of the wedge corners: `3 / (4 - 2*sqrt(2))`, the
/// coordinate of the first-quadrant point equidistant from the two adjacent
/// axis points and from the unit circle.
pub fn wedge_corner_coordinate<S: Scalar>() -> S {
    S::lit(3.0) / (S::lit(4.0) - S::two() * S::two().sqrt())
}

/// Closed quadrants around the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub fn contains<S: Scalar>(self, p: Point2<S>) -> bool {
        let z = S::zero();
        match self {
            Quadrant::Q1 => p.x >= z && p.y >= z,
            Quadrant::Q2 => p.x <= z && p.y >= z,
            Quadrant::Q3 => p.x <= z && p.y <= z,
            Quadrant::Q4 => p.x >= z && p.y <= z,
        }
    }
}

/// Normalizing transform from input coordinates to frame coordinates.
#[derive(Debug, Clone)]
pub struct Frame<S> {
    /// Minimal-disk center in input coordinates.
    pub center: Point2<S>,
    /// Minimal-disk radius in input coordinates (the frame's unit).
    pub scale: S,
    /// Rotation applied after centering, in radians.
    pub rotation: S,
    /// Whether `x -> -x` is applied after rotation (case-exchange mirror).
    pub mirrored: bool,
    /// Role -> index into the tangency arrays (a permutation of 0..3).
    pub slots: [usize; 3],
    /// Role -> index into the input disk list.
    pub disk_indices: [usize; 3],
}

impl<S: Scalar> Frame<S> {
    pub fn to_frame(&self, p: Point2<S>) -> Point2<S> {
        let v = (p - self.center) / self.scale;
        let (sin, cos) = self.rotation.sin_cos();
        let r = Point2::new(cos * v.x - sin * v.y, sin * v.x + cos * v.y);
        if self.mirrored {
            Point2::new(-r.x, r.y)
        } else {
            r
        }
    }

    pub fn to_world(&self, p: Point2<S>) -> Point2<S> {
        let m = if self.mirrored {
            Point2::new(-p.x, p.y)
        } else {
            p
        };
        let (sin, cos) = self.rotation.sin_cos();
        let r = Point2::new(cos * m.x + sin * m.y, -sin * m.x + cos * m.y);
        r * self.scale + self.center
    }

    pub fn direction_to_frame(&self, d: Point2<S>) -> Point2<S> {
        let (sin, cos) = self.rotation.sin_cos();
        let r = Point2::new(cos * d.x - sin * d.y, sin * d.x + cos * d.y);
        if self.mirrored {
            Point2::new(-r.x, r.y)
        } else {
            r
        }
    }

    pub fn line_to_frame(&self, line: Line2<S>) -> Line2<S> {
        Line2::new(
            self.to_frame(line.anchor),
            self.direction_to_frame(line.direction),
        )
    }

    /// The case-exchange mirror: reflects frame coordinates about the
    /// vertical axis and swaps roles 2 and 3. Applying it twice restores the
    /// original frame.
    pub fn mirrored_frame(&self) -> Frame<S> {
        let mut f = self.clone();
        f.mirrored = !f.mirrored;
        f.slots.swap(1, 2);
        f.disk_indices.swap(1, 2);
        f
    }

    /// Transforms the polygon's vertex loop into frame coordinates.
    pub fn polygon_to_frame(&self, poly: &SimplePolygon<S>) -> SimplePolygon<S> {
        SimplePolygon::from_transformed_loop(
            poly.vertices().iter().map(|&v| self.to_frame(v)).collect(),
        )
    }
}

/// Builds the frame from a non-Helly minimal-disk result.
pub fn build_frame<S: Scalar>(result: &MinDiskResult<S>) -> Result<Frame<S>> {
    let tangency = result
        .tangency
        .as_ref()
        .expect("frame requires a non-Helly result");
    build_frame_from_tangency(result.center, result.radius, tangency)
}

fn build_frame_from_tangency<S: Scalar>(
    center: Point2<S>,
    radius: S,
    tangency: &TangencyData<S>,
) -> Result<Frame<S>> {
    // Tangent-line triangle corners; corner k is opposite line k.
    let mut corners = [Point2::new(S::zero(), S::zero()); 3];
    for (k, corner) in corners.iter_mut().enumerate() {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        *corner = tangency.lines[i]
            .intersect(tangency.lines[j])
            .ok_or(Error::DegenerateTangentTriangle(i, j))?;
    }
    // Interior angle at each corner; the largest sits opposite role 1.
    let mut role1 = 0usize;
    let mut best = S::neg_infinity();
    for (k, &corner) in corners.iter().enumerate() {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let u = (corners[i] - corner).normalized();
        let v = (corners[j] - corner).normalized();
        let ang = u.dot(v).max(-S::one()).min(S::one()).acos();
        if ang > best {
            best = ang;
            role1 = k;
        }
    }

    // Rotate the role-1 tangency point to (0, -1).
    let dir = tangency.points[role1] - center;
    let rotation = -S::FRAC_PI_2() - dir.y.atan2(dir.x);

    let mut frame = Frame {
        center,
        scale: radius,
        rotation,
        mirrored: false,
        slots: [role1, (role1 + 1) % 3, (role1 + 2) % 3],
        disk_indices: [0; 3],
    };
    // Role 2 meets the horizontal tangent line at positive x. Corner k sits
    // opposite line k, so the corner between role 1 and a candidate role is
    // the corner labeled by the remaining index.
    let a = frame.to_frame(corners[(role1 + 2) % 3]); // between lines role1 and role1+1
    let b = frame.to_frame(corners[(role1 + 1) % 3]); // between lines role1 and role1+2
    if a.x < b.x {
        frame.slots.swap(1, 2);
    }
    for k in 0..3 {
        frame.disk_indices[k] = tangency.indices[frame.slots[k]];
    }
    Ok(frame)
}

/// All landmark points of the normalized configuration.
#[derive(Debug, Clone)]
pub struct Landmarks<S> {
    /// Axis points at distance two: (2,0), (0,2), (-2,0), (0,-2).
    pub axis: [Point2<S>; 4],
    /// Wedge corners `(±a, ±a)`, one per quadrant.
    pub corner: [Point2<S>; 4],
    /// Entry windows through each axis point (plus end, minus end).
    pub window: [(Point2<S>, Point2<S>); 4],
    /// Tangency points in frame coordinates, by role.
    pub tangency: [Point2<S>; 3],
    /// Tangent lines in frame coordinates, by role.
    pub lines: [Line2<S>; 3],
    /// Tangent-line triangle corners: (roles 1,2), (roles 2,3), (roles 3,1).
    pub tangent_corners: [Point2<S>; 3],
    /// Lines through each corner perpendicular to its direction from the
    /// origin.
    pub corner_normals: [Line2<S>; 3],
    /// Acute angle of the role-2 tangent line against the x-axis.
    pub alpha2: S,
    /// Acute angle of the role-3 tangent line against the x-axis.
    pub alpha3: S,
}

impl<S: Scalar> Landmarks<S> {
    /// Axis point by 1-based index.
    pub fn axis_point(&self, i: usize) -> Point2<S> {
        self.axis[(i - 1) % 4]
    }

    /// Wedge corner by 1-based index.
    pub fn corner_point(&self, i: usize) -> Point2<S> {
        self.corner[(i - 1) % 4]
    }

    /// Intersection of the corner normal between roles `i`, `j` with the ray
    /// from the origin through the role-`i` tangency.
    pub fn window_projection(&self, i: usize, j: usize) -> Option<Point2<S>> {
        let corner = match (i, j) {
            (1, 2) | (2, 1) => 0,
            (2, 3) | (3, 2) => 1,
            (3, 1) | (1, 3) => 2,
            _ => return None,
        };
        let ray = Line2::through(Point2::new(S::zero(), S::zero()), self.tangency[i - 1]);
        self.corner_normals[corner].intersect(ray)
    }
}

/// Whether `p` is at least as close to `target` as to every point of the
/// unit circle around the origin.
pub fn closer_to_point_than_to_unit_circle<S: Scalar>(target: Point2<S>, p: Point2<S>) -> bool {
    p.dist(target) <= (p.norm() - S::one()).abs()
}

/// Computes every landmark of a frame.
pub fn landmarks<S: Scalar>(frame: &Frame<S>, tangency: &TangencyData<S>) -> Landmarks<S> {
    let two = S::two();
    let a = wedge_corner_coordinate::<S>();
    let z = S::zero();
    let axis = [
        Point2::new(two, z),
        Point2::new(z, two),
        Point2::new(-two, z),
        Point2::new(z, -two),
    ];
    let corner = [
        Point2::new(a, a),
        Point2::new(-a, a),
        Point2::new(-a, -a),
        Point2::new(a, -a),
    ];
    let s15 = S::lit(1.5);
    let window = [
        (Point2::new(two, s15), Point2::new(two, -s15)),
        (Point2::new(-s15, two), Point2::new(s15, two)),
        (Point2::new(-two, -s15), Point2::new(-two, s15)),
        (Point2::new(s15, -two), Point2::new(-s15, -two)),
    ];

    let tang = [
        frame.to_frame(tangency.points[frame.slots[0]]),
        frame.to_frame(tangency.points[frame.slots[1]]),
        frame.to_frame(tangency.points[frame.slots[2]]),
    ];
    let lines = [
        frame.line_to_frame(tangency.lines[frame.slots[0]]),
        frame.line_to_frame(tangency.lines[frame.slots[1]]),
        frame.line_to_frame(tangency.lines[frame.slots[2]]),
    ];

    let origin = Point2::new(z, z);
    let pair = |u: usize, v: usize| lines[u].intersect(lines[v]).unwrap_or(origin);
    let tangent_corners = [pair(0, 1), pair(1, 2), pair(2, 0)];
    let corner_normals = [
        Line2::new(tangent_corners[0], tangent_corners[0].perp()),
        Line2::new(tangent_corners[1], tangent_corners[1].perp()),
        Line2::new(tangent_corners[2], tangent_corners[2].perp()),
    ];

    Landmarks {
        axis,
        corner,
        window,
        tangency: tang,
        lines,
        tangent_corners,
        corner_normals,
        alpha2: lines[1].acute_angle_to_x_axis(),
        alpha3: lines[2].acute_angle_to_x_axis(),
    }
}

/// True when the polygon boundary obstructs the closed segment between two
/// frame-coordinate points (an endpoint outside the polygon counts as an
/// obstruction).
pub fn polygon_meets_segment<S: Scalar>(
    frame_poly: &SimplePolygon<S>,
    a: Point2<S>,
    b: Point2<S>,
) -> bool {
    !frame_poly.segment_in_polygon_unchecked(Segment2::new(a, b))
}

/// The sanity assertion behind the five-point construction: the polygon
/// avoids the two triangles spanned by the origin and the axis points
/// 1, 4 and 3, 4. A failure indicates an upstream minimal-disk error.
pub fn axis_triangles_clear<S: Scalar>(frame_poly: &SimplePolygon<S>, lm: &Landmarks<S>) -> bool {
    let origin = Point2::new(S::zero(), S::zero());
    let tri_a = [lm.axis[0], origin, lm.axis[3]];
    let tri_b = [lm.axis[2], origin, lm.axis[3]];
    for tri in [tri_a, tri_b] {
        for (u, v) in frame_poly.edges() {
            if edge_meets_triangle(u, v, &tri) {
                return false;
            }
        }
    }
    true
}

fn edge_meets_triangle<S: Scalar>(u: Point2<S>, v: Point2<S>, tri: &[Point2<S>; 3]) -> bool {
    use crate::kernel::{orient_sign, segments_cross_properly};
    let inside = |p: Point2<S>| {
        let s1 = orient_sign(tri[0], tri[1], p);
        let s2 = orient_sign(tri[1], tri[2], p);
        let s3 = orient_sign(tri[2], tri[0], p);
        (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
    };
    if inside(u) || inside(v) {
        return true;
    }
    for k in 0..3 {
        if segments_cross_properly(u, v, tri[k], tri[(k + 1) % 3]) {
            return true;
        }
    }
    false
}

/// Checked implications relating wedge-segment obstructions to lower bounds
/// on the tangent-line angles. Returns the violated implications (expected
/// none on valid inputs).
pub fn angle_bound_violations<S: Scalar>(
    frame_poly: &SimplePolygon<S>,
    lm: &Landmarks<S>,
) -> Vec<&'static str> {
    let lower = S::PI() / S::lit(5.0);
    let mut out = Vec::new();
    let meets = |zi: usize, gi: usize| {
        polygon_meets_segment(frame_poly, lm.corner_point(zi), lm.axis_point(gi))
    };
    if (meets(4, 1) || meets(4, 4)) && lm.alpha2 <= lower {
        out.push("blocked corner-4 window but alpha2 <= pi/5");
    }
    if (meets(3, 3) || meets(3, 4)) && lm.alpha3 <= lower {
        out.push("blocked corner-3 window but alpha3 <= pi/5");
    }
    out
}
