//! Points, segments and lines.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Scalar;
use crate::tol;

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    #[inline]
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn of(x: f64, y: f64) -> Self {
        Point2 {
            x: S::lit(x),
            y: S::lit(y),
        }
    }

    #[inline]
    pub fn dot(self, o: Self) -> S {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product, treating both as vectors.
    #[inline]
    pub fn cross(self, o: Self) -> S {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm2(self) -> S {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> S {
        self.norm2().sqrt()
    }

    #[inline]
    pub fn dist(self, o: Self) -> S {
        (self - o).norm()
    }

    /// Counterclockwise perpendicular.
    #[inline]
    pub fn perp(self) -> Self {
        Point2 {
            x: -self.y,
            y: self.x,
        }
    }

    #[inline]
    pub fn normalized(self) -> Self {
        let n = self.norm();
        Point2 {
            x: self.x / n,
            y: self.y / n,
        }
    }

    #[inline]
    pub fn lerp(self, o: Self, t: S) -> Self {
        self + (o - self) * t
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn angle(self) -> S {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn as_f64(self) -> Point2<f64> {
        Point2 {
            x: self.x.as_f64(),
            y: self.y.as_f64(),
        }
    }

    /// Euclidean distance from `self` to the segment `ab`.
    pub fn dist_to_segment(self, a: Self, b: Self) -> S {
        let ab = b - a;
        let len2 = ab.norm2();
        if len2 <= S::zero() {
            return self.dist(a);
        }
        let t = ((self - a).dot(ab) / len2).max(S::zero()).min(S::one());
        self.dist(a + ab * t)
    }
}

impl<S: Scalar> Add for Point2<S> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Point2 {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl<S: Scalar> Sub for Point2<S> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Point2 {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl<S: Scalar> Mul<S> for Point2<S> {
    type Output = Self;
    #[inline]
    fn mul(self, k: S) -> Self {
        Point2 {
            x: self.x * k,
            y: self.y * k,
        }
    }
}

impl<S: Scalar> Div<S> for Point2<S> {
    type Output = Self;
    #[inline]
    fn div(self, k: S) -> Self {
        Point2 {
            x: self.x / k,
            y: self.y / k,
        }
    }
}

impl<S: Scalar> Neg for Point2<S> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Point2 {
            x: -self.x,
            y: -self.y,
        }
    }
}

/// A segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment2<S> {
    pub a: Point2<S>,
    pub b: Point2<S>,
}

impl<S: Scalar> Segment2<S> {
    #[inline]
    pub fn new(a: Point2<S>, b: Point2<S>) -> Self {
        Segment2 { a, b }
    }

    #[inline]
    pub fn length(self) -> S {
        self.a.dist(self.b)
    }

    #[inline]
    pub fn midpoint(self) -> Point2<S> {
        self.a.lerp(self.b, S::half())
    }

    #[inline]
    pub fn at(self, t: S) -> Point2<S> {
        self.a.lerp(self.b, t)
    }
}

/// An infinite line given by an anchor point and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2<S> {
    pub anchor: Point2<S>,
    pub direction: Point2<S>,
}

impl<S: Scalar> Line2<S> {
    /// Builds a line, normalizing the direction.
    pub fn new(anchor: Point2<S>, direction: Point2<S>) -> Self {
        Line2 {
            anchor,
            direction: direction.normalized(),
        }
    }

    pub fn through(a: Point2<S>, b: Point2<S>) -> Self {
        Line2::new(a, b - a)
    }

    /// Signed distance from `p`; positive on the left of the direction.
    #[inline]
    pub fn signed_dist(self, p: Point2<S>) -> S {
        self.direction.cross(p - self.anchor)
    }

    #[inline]
    pub fn is_unit(self) -> bool {
        (self.direction.norm() - S::one()).abs() <= S::lit(tol::EPS_UNIT)
    }

    /// Intersection point of two lines; `None` when near-parallel.
    pub fn intersect(self, other: Self) -> Option<Point2<S>> {
        let denom = self.direction.cross(other.direction);
        if denom.abs() <= S::lit(1e-9) {
            return None;
        }
        let t = (other.anchor - self.anchor).cross(other.direction) / denom;
        Some(self.anchor + self.direction * t)
    }

    /// Acute angle between the line and the x-axis, in (0, pi/2].
    /// Returns zero for horizontal lines.
    pub fn acute_angle_to_x_axis(self) -> S {
        let ang = self.direction.y.atan2(self.direction.x).abs();
        if ang > S::FRAC_PI_2() {
            S::PI() - ang
        } else {
            ang
        }
    }
}
