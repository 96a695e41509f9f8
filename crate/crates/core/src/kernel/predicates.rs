//! Orientation and intersection predicates.

use num_bigint::BigInt;
use num_rational::Ratio;

use super::point::Point2;
use crate::scalar::Scalar;
use crate::tol;

/// Raw orientation determinant: positive when `c` lies to the left of the
/// directed line `a -> b`.
#[inline]
pub fn orient<S: Scalar>(a: Point2<S>, b: Point2<S>, c: Point2<S>) -> S {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Sign of the orientation determinant with an exact fallback.
///
/// The naive determinant is trusted whenever it is clear of zero; otherwise
/// the sign is recomputed in exact rational arithmetic. The threshold covers
/// both the absolute reading (frame coordinates are O(1)) and the relative
/// rounding bound for large inputs.
pub fn orient_sign<S: Scalar>(a: Point2<S>, b: Point2<S>, c: Point2<S>) -> i8 {
    let det = orient(a, b, c);
    let mag = ((b.x - a.x) * (c.y - a.y)).abs() + ((b.y - a.y) * (c.x - a.x)).abs();
    let threshold = S::lit(tol::EPS_ORIENT) * mag.max(S::one());
    if det > threshold {
        1
    } else if det < -threshold {
        -1
    } else {
        orient_sign_exact(a.as_f64(), b.as_f64(), c.as_f64())
    }
}

fn big(v: f64) -> Ratio<BigInt> {
    Ratio::from_float(v).expect("finite coordinate")
}

fn orient_sign_exact(a: Point2<f64>, b: Point2<f64>, c: Point2<f64>) -> i8 {
    let det = (big(b.x) - big(a.x)) * (big(c.y) - big(a.y))
        - (big(b.y) - big(a.y)) * (big(c.x) - big(a.x));
    let zero = Ratio::from_integer(BigInt::from(0));
    if det > zero {
        1
    } else if det < zero {
        -1
    } else {
        0
    }
}

/// True when `p` lies on the closed segment `ab`, assuming `p` is already
/// known to be collinear with `a` and `b`.
pub fn collinear_on_segment<S: Scalar>(a: Point2<S>, b: Point2<S>, p: Point2<S>) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True when the open interiors of segments `p1p2` and `q1q2` cross at a
/// single point (proper crossing; touching configurations excluded).
pub fn segments_cross_properly<S: Scalar>(
    p1: Point2<S>,
    p2: Point2<S>,
    q1: Point2<S>,
    q2: Point2<S>,
) -> bool {
    let d1 = orient_sign(q1, q2, p1);
    let d2 = orient_sign(q1, q2, p2);
    let d3 = orient_sign(p1, p2, q1);
    let d4 = orient_sign(p1, p2, q2);
    d1 * d2 < 0 && d3 * d4 < 0
}

/// True when segments `p1p2` and `q1q2` share at least one point (closed
/// segments, touching counts).
pub fn segments_touch<S: Scalar>(
    p1: Point2<S>,
    p2: Point2<S>,
    q1: Point2<S>,
    q2: Point2<S>,
) -> bool {
    let d1 = orient_sign(q1, q2, p1);
    let d2 = orient_sign(q1, q2, p2);
    let d3 = orient_sign(p1, p2, q1);
    let d4 = orient_sign(p1, p2, q2);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && collinear_on_segment(q1, q2, p1))
        || (d2 == 0 && collinear_on_segment(q1, q2, p2))
        || (d3 == 0 && collinear_on_segment(p1, p2, q1))
        || (d4 == 0 && collinear_on_segment(p1, p2, q2))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Point2<f64>;

    #[test]
    fn orientation_basic() {
        let a = P::of(0.0, 0.0);
        let b = P::of(1.0, 0.0);
        assert_eq!(orient_sign(a, b, P::of(0.5, 1.0)), 1);
        assert_eq!(orient_sign(a, b, P::of(0.5, -1.0)), -1);
        assert_eq!(orient_sign(a, b, P::of(2.0, 0.0)), 0);
    }

    #[test]
    fn orientation_near_degenerate_is_exact() {
        // Three points collinear up to the last bit: the exact fallback must
        // classify the tiny perturbation consistently.
        let a = P::of(0.0, 0.0);
        let b = P::of(1.0, 1.0);
        let c = P::of(0.5, 0.5 + 1e-17);
        // 0.5 + 1e-17 rounds to 0.5 exactly in f64, so this is collinear.
        assert_eq!(orient_sign(a, b, c), 0);
        let c2 = P::of(0.5, 0.5 * (1.0 + f64::EPSILON));
        assert_eq!(orient_sign(a, b, c2), 1);
        assert_eq!(orient_sign(b, a, c2), -1);
    }

    #[test]
    fn proper_crossing() {
        let a = P::of(0.0, 0.0);
        let b = P::of(2.0, 2.0);
        assert!(segments_cross_properly(
            a,
            b,
            P::of(0.0, 2.0),
            P::of(2.0, 0.0)
        ));
        // Touching at an endpoint is not a proper crossing.
        assert!(!segments_cross_properly(
            a,
            b,
            P::of(1.0, 1.0),
            P::of(3.0, 0.0)
        ));
        assert!(segments_touch(a, b, P::of(1.0, 1.0), P::of(3.0, 0.0)));
        assert!(!segments_touch(a, b, P::of(3.0, 0.0), P::of(4.0, 0.0)));
    }
}
