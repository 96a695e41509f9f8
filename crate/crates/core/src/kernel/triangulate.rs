//! Ear-clipping triangulation with a dual adjacency map.

use super::point::Point2;
use super::polygon::SimplePolygon;
use super::predicates::orient_sign;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which ear the clipping loop removes first. `Backward` yields a different
/// diagonal set, which the verification path uses to decorrelate errors from
/// the main pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EarOrder {
    #[default]
    Forward,
    Backward,
}

/// A triangulation of a simple polygon.
///
/// `triangles` hold vertex indices in the polygon's (clockwise) order;
/// `neighbors[t][k]` is the triangle sharing the edge from `triangles[t][k]`
/// to `triangles[t][(k+1)%3]`, when that edge is a diagonal.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
    pub neighbors: Vec<[Option<usize>; 3]>,
}

impl Triangulation {
    /// Indices of the triangles that contain `p` (boundary inclusive).
    pub fn locate<S: Scalar>(&self, poly: &SimplePolygon<S>, p: Point2<S>) -> Option<usize> {
        let mut best: Option<(usize, S)> = None;
        for (t, tri) in self.triangles.iter().enumerate() {
            let (a, b, c) = (
                poly.vertex(tri[0]),
                poly.vertex(tri[1]),
                poly.vertex(tri[2]),
            );
            if point_in_triangle_exact(a, b, c, p) {
                return Some(t);
            }
            // Track the least-violating triangle as a numeric fallback.
            let v = triangle_violation(a, b, c, p);
            if best.is_none_or(|(_, bv)| v < bv) {
                best = Some((t, v));
            }
        }
        let eps = S::lit(crate::tol::EPS_GEOM) * poly.diameter().max(S::one());
        best.and_then(|(t, v)| if v <= eps { Some(t) } else { None })
    }
}

/// Exact containment in the closed triangle `abc` (any orientation).
fn point_in_triangle_exact<S: Scalar>(
    a: Point2<S>,
    b: Point2<S>,
    c: Point2<S>,
    p: Point2<S>,
) -> bool {
    let s1 = orient_sign(a, b, p);
    let s2 = orient_sign(b, c, p);
    let s3 = orient_sign(c, a, p);
    (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
}

/// How far outside `p` is, as a max of outward edge distances (0 if inside).
fn triangle_violation<S: Scalar>(a: Point2<S>, b: Point2<S>, c: Point2<S>, p: Point2<S>) -> S {
    let w = if orient_sign(a, b, c) >= 0 {
        S::one()
    } else {
        -S::one()
    };
    let mut worst = S::zero();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        let d = v - u;
        let n = d.norm();
        if n > S::zero() {
            let signed = d.cross(p - u) / n * w;
            worst = worst.max(-signed);
        }
    }
    worst
}

/// Triangulates a simple polygon by ear clipping.
///
/// Produces exactly `n - 2` triangles whose areas sum to the polygon area.
pub fn triangulate<S: Scalar>(poly: &SimplePolygon<S>, order: EarOrder) -> Result<Triangulation> {
    let n = poly.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(n - 2);

    while alive.len() > 3 {
        let m = alive.len();
        let mut clipped = false;
        // First pass: strictly convex ears; second pass admits collinear ears.
        for allow_flat in [false, true] {
            let scan: Box<dyn Iterator<Item = usize>> = match order {
                EarOrder::Forward => Box::new(0..m),
                EarOrder::Backward => Box::new((0..m).rev()),
            };
            for k in scan {
                if is_ear(poly, &alive, k, allow_flat) {
                    let i = alive[(k + m - 1) % m];
                    let j = alive[k];
                    let l = alive[(k + 1) % m];
                    triangles.push([i, j, l]);
                    alive.remove(k);
                    clipped = true;
                    break;
                }
            }
            if clipped {
                break;
            }
        }
        if !clipped {
            return Err(Error::NoEarFound(alive.len()));
        }
    }
    triangles.push([alive[0], alive[1], alive[2]]);

    let neighbors = build_neighbors(&triangles);
    Ok(Triangulation {
        triangles,
        neighbors,
    })
}

/// Ear test at alive position `k`: the corner must turn clockwise (the
/// polygon is stored clockwise) and no other alive vertex may lie inside or
/// on the candidate triangle.
fn is_ear<S: Scalar>(poly: &SimplePolygon<S>, alive: &[usize], k: usize, allow_flat: bool) -> bool {
    let m = alive.len();
    let prev = poly.vertex(alive[(k + m - 1) % m]);
    let cur = poly.vertex(alive[k]);
    let next = poly.vertex(alive[(k + 1) % m]);
    let turn = orient_sign(prev, cur, next);
    if turn > 0 || (turn == 0 && !allow_flat) {
        return false;
    }
    if turn == 0 {
        // A flat ear is clippable only when the straight corner points
        // forward (not a spike; validation already rejected spikes).
        return true;
    }
    for (idx, &v) in alive.iter().enumerate() {
        if idx == k || idx == (k + m - 1) % m || idx == (k + 1) % m {
            continue;
        }
        let q = poly.vertex(v);
        // Clockwise triangle: inside-or-boundary means all orients <= 0.
        if orient_sign(prev, cur, q) <= 0
            && orient_sign(cur, next, q) <= 0
            && orient_sign(next, prev, q) <= 0
        {
            return false;
        }
    }
    true
}

fn build_neighbors(triangles: &[[usize; 3]]) -> Vec<[Option<usize>; 3]> {
    use std::collections::HashMap;
    let mut edge_map: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut neighbors = vec![[None; 3]; triangles.len()];
    for (t, tri) in triangles.iter().enumerate() {
        for k in 0..3 {
            let a = tri[k];
            let b = tri[(k + 1) % 3];
            let key = (a.min(b), a.max(b));
            if let Some(&(t2, k2)) = edge_map.get(&key) {
                neighbors[t][k] = Some(t2);
                neighbors[t2][k2] = Some(t);
            } else {
                edge_map.insert(key, (t, k));
            }
        }
    }
    neighbors
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Point2<f64>;

    fn poly(pts: &[(f64, f64)]) -> SimplePolygon<f64> {
        SimplePolygon::validate(pts.iter().map(|&(x, y)| P::of(x, y)).collect()).unwrap()
    }

    fn tri_area(poly: &SimplePolygon<f64>, t: &[usize; 3]) -> f64 {
        let (a, b, c) = (poly.vertex(t[0]), poly.vertex(t[1]), poly.vertex(t[2]));
        ((b - a).cross(c - a) * 0.5).abs()
    }

    #[test]
    fn unit_square_two_triangles() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let t = triangulate(&sq, EarOrder::Forward).unwrap();
        assert_eq!(t.triangles.len(), 2);
        let sum: f64 = t.triangles.iter().map(|tr| tri_area(&sq, tr)).sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn convex_pentagon_three_triangles() {
        let p = poly(&[(0.0, 0.0), (2.0, 0.0), (3.0, 2.0), (1.0, 3.5), (-1.0, 2.0)]);
        let t = triangulate(&p, EarOrder::Forward).unwrap();
        assert_eq!(t.triangles.len(), 3);
        let sum: f64 = t.triangles.iter().map(|tr| tri_area(&p, tr)).sum();
        assert!((sum - p.area()).abs() / p.area() < 1e-12);
    }

    #[test]
    fn comb_polygon_area_conserved() {
        // 12-vertex comb with two teeth.
        let p = poly(&[
            (0.0, 0.0),
            (6.0, 0.0),
            (6.0, 3.0),
            (5.0, 3.0),
            (5.0, 1.0),
            (4.0, 1.0),
            (4.0, 3.0),
            (2.0, 3.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 3.0),
            (0.0, 3.0),
        ]);
        let t = triangulate(&p, EarOrder::Forward).unwrap();
        assert_eq!(t.triangles.len(), 10);
        let sum: f64 = t.triangles.iter().map(|tr| tri_area(&p, tr)).sum();
        assert!((sum - p.area()).abs() / p.area() < 1e-9);
    }

    #[test]
    fn orders_give_different_diagonals() {
        let p = poly(&[
            (0.0, 0.0),
            (4.0, 0.0),
            (5.0, 2.0),
            (2.0, 4.0),
            (-1.0, 2.0),
            (0.5, 1.0),
        ]);
        let f = triangulate(&p, EarOrder::Forward).unwrap();
        let b = triangulate(&p, EarOrder::Backward).unwrap();
        assert_eq!(f.triangles.len(), 4);
        assert_eq!(b.triangles.len(), 4);
        assert_ne!(f.triangles, b.triangles);
    }

    #[test]
    fn adjacency_is_symmetric() {
        let p = poly(&[
            (0.0, 0.0),
            (4.0, 0.0),
            (5.0, 2.0),
            (2.0, 4.0),
            (-1.0, 2.0),
            (0.5, 1.0),
        ]);
        let t = triangulate(&p, EarOrder::Forward).unwrap();
        for (i, nbrs) in t.neighbors.iter().enumerate() {
            for n in nbrs.iter().flatten() {
                assert!(t.neighbors[*n].iter().flatten().any(|&m| m == i));
            }
        }
    }

    #[test]
    fn locate_finds_containing_triangle() {
        let p = poly(&[(0.0, 0.0), (4.0, 0.0), (5.0, 2.0), (2.0, 4.0), (-1.0, 2.0)]);
        let t = triangulate(&p, EarOrder::Forward).unwrap();
        let q = P::of(2.0, 1.5);
        let idx = t.locate(&p, q).unwrap();
        let tr = t.triangles[idx];
        assert!(point_in_triangle_exact(
            p.vertex(tr[0]),
            p.vertex(tr[1]),
            p.vertex(tr[2]),
            q
        ));
        assert!(t.locate(&p, P::of(10.0, 10.0)).is_none());
    }
}
