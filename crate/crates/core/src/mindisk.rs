//! The minimal geodesic disk meeting every input disk.
//!
//! The piercing depth `f(x) = max_i (dist(x, c_i) - r_i)` is convex along
//! every geodesic (each summand is, by the convexity of geodesic distance),
//! so a local minimum is global. The search runs a rotating compass pattern
//! search from the best triangle centroid, then polishes the result with a
//! Newton equalization step on the three deepest disks, which drives the
//! tangency residuals to machine precision in the generic case.

use crate::error::{Error, Result};
use crate::geodesic::{root_at, GeodesicDisk, RootedSource};
use crate::kernel::{orient_sign, Line2, Point2, PointLocation, SimplePolygon, Triangulation};
use crate::scalar::Scalar;
use crate::tol;

/// Value of the piercing depth function at a query point.
#[derive(Debug, Clone, Copy)]
pub struct PiercingDepth<S> {
    pub value: S,
}

/// Tangency structure of the minimal disk: three touching disks with their
/// tangency points and tangent lines.
#[derive(Debug, Clone)]
pub struct TangencyData<S> {
    pub indices: [usize; 3],
    pub points: [Point2<S>; 3],
    pub lines: [Line2<S>; 3],
}

/// Result of the minimal-disk search.
#[derive(Debug, Clone)]
pub struct MinDiskResult<S> {
    pub center: Point2<S>,
    pub radius: S,
    pub helly: bool,
    /// Present exactly when the family is not Helly.
    pub tangency: Option<TangencyData<S>>,
}

/// Distance evaluator with the dual tree pre-rooted at every disk center.
pub struct DepthField<'a, S: Scalar> {
    poly: &'a SimplePolygon<S>,
    tri: &'a Triangulation,
    disks: &'a [GeodesicDisk<S>],
    rooted: Vec<RootedSource<S>>,
}

impl<'a, S: Scalar> DepthField<'a, S> {
    pub fn new(
        poly: &'a SimplePolygon<S>,
        tri: &'a Triangulation,
        disks: &'a [GeodesicDisk<S>],
    ) -> Result<Self> {
        if disks.is_empty() {
            return Err(Error::NoDisks);
        }
        let rooted = disks
            .iter()
            .map(|d| root_at(poly, tri, d.center))
            .collect::<Result<Vec<_>>>()?;
        Ok(DepthField {
            poly,
            tri,
            disks,
            rooted,
        })
    }

    pub fn distance_to_center(&self, i: usize, x: Point2<S>) -> Result<S> {
        self.rooted[i].distance_to(self.poly, self.tri, x)
    }

    fn locate(&self, x: Point2<S>) -> Result<usize> {
        self.tri
            .locate(self.poly, x)
            .ok_or(crate::error::Error::PointOutsidePolygon)
    }

    /// f(x) = max_i (dist(x, c_i) - r_i).
    pub fn eval(&self, x: Point2<S>) -> Result<S> {
        let t_idx = self.locate(x)?;
        let mut worst = S::neg_infinity();
        for (i, disk) in self.disks.iter().enumerate() {
            let d = self.rooted[i]
                .path_to_located(self.poly, self.tri, x, t_idx)?
                .length;
            worst = worst.max(d - disk.radius);
        }
        Ok(worst)
    }

    /// Evaluates f(x), giving up early once any term reaches `cutoff`
    /// (then `None` is returned and f(x) >= cutoff is guaranteed). The disk
    /// visiting order self-organizes so the dominating disk is probed first.
    fn eval_pruned(&self, x: Point2<S>, cutoff: S, order: &mut [usize]) -> Result<Option<S>> {
        let t_idx = self.locate(x)?;
        let mut worst = S::neg_infinity();
        for pos in 0..order.len() {
            let i = order[pos];
            let d = self.rooted[i]
                .path_to_located(self.poly, self.tri, x, t_idx)?
                .length
                - self.disks[i].radius;
            if d >= cutoff {
                order[..=pos].rotate_right(1);
                return Ok(None);
            }
            worst = worst.max(d);
        }
        Ok(Some(worst))
    }

    /// Per-disk depths, largest first, as (disk index, value).
    fn ranked(&self, x: Point2<S>) -> Result<Vec<(usize, S)>> {
        let mut v = Vec::with_capacity(self.disks.len());
        for (i, disk) in self.disks.iter().enumerate() {
            let d = self.distance_to_center(i, x)?;
            v.push((i, d - disk.radius));
        }
        v.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        Ok(v)
    }

    /// Gradient of `dist(x, c_i)` at `x`: the unit vector pointing away from
    /// the last bend of the geodesic toward `x`.
    fn distance_gradient(&self, i: usize, x: Point2<S>) -> Result<Point2<S>> {
        let path = self.rooted[i].path_to(self.poly, self.tri, x)?;
        let n = path.waypoints.len();
        if n < 2 {
            return Ok(Point2::new(S::zero(), S::zero()));
        }
        let w = path.waypoints[n - 2];
        Ok((x - w).normalized())
    }

    /// Steepest-descent direction of the terms within `window` of the
    /// maximum: minus the summed gradients of the near-active disks. Cuts
    /// through two-disk valleys that axis probing cannot see.
    fn active_descent_direction(&self, x: Point2<S>, window: S) -> Result<Option<Point2<S>>> {
        let t_idx = self.locate(x)?;
        let mut terms = Vec::with_capacity(self.disks.len());
        let mut fmax = S::neg_infinity();
        for (i, disk) in self.disks.iter().enumerate() {
            let d = self.rooted[i]
                .path_to_located(self.poly, self.tri, x, t_idx)?
                .length
                - disk.radius;
            fmax = fmax.max(d);
            terms.push((i, d));
        }
        let mut dir = Point2::new(S::zero(), S::zero());
        for (i, d) in terms {
            if d >= fmax - window {
                dir = dir - self.distance_gradient(i, x)?;
            }
        }
        let n = dir.norm();
        if n <= S::lit(1e-9) {
            return Ok(None);
        }
        Ok(Some(dir / n))
    }
}

/// Piercing depth at `x`.
pub fn depth<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
    x: Point2<S>,
) -> Result<PiercingDepth<S>> {
    if poly.locate(x) == PointLocation::Outside {
        return Err(Error::PointOutsidePolygon);
    }
    let field = DepthField::new(poly, tri, disks)?;
    Ok(PiercingDepth {
        value: field.eval(x)?,
    })
}

/// True when every pair of disks intersects (within the geometric
/// classification tolerance).
pub fn verify_pairwise<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
) -> Result<bool> {
    Ok(first_disjoint_pair(poly, tri, disks)?.is_none())
}

fn first_disjoint_pair<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
) -> Result<Option<(usize, usize)>> {
    let scale = disks.iter().fold(S::one(), |m, d| m.max(d.radius));
    let slack = S::lit(tol::EPS_GEOM) * scale;
    for i in 0..disks.len() {
        let rooted = root_at(poly, tri, disks[i].center)?;
        for j in (i + 1)..disks.len() {
            let d = rooted.distance_to(poly, tri, disks[j].center)?;
            if d > disks[i].radius + disks[j].radius + slack {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Computes the minimal disk, classifies the Helly case and extracts the
/// tangency structure otherwise.
pub fn compute_min_disk<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
) -> Result<MinDiskResult<S>> {
    if let Some((i, j)) = first_disjoint_pair(poly, tri, disks)? {
        return Err(Error::NotPairwiseIntersecting(i, j));
    }
    let field = DepthField::new(poly, tri, disks)?;
    let r_scale = disks.iter().fold(S::zero(), |m, d| m.max(d.radius));
    let center = match minimize(&field, r_scale)? {
        // A clearly negative depth witnesses the Helly case without running
        // the search to full precision.
        Minimized::HellyWitness(p, v) => {
            return Ok(MinDiskResult {
                center: p,
                radius: v,
                helly: true,
                tangency: None,
            })
        }
        Minimized::At(p) => p,
    };
    let radius = field.eval(center)?;

    if radius <= S::lit(tol::TAU_TAN) * r_scale {
        return Ok(MinDiskResult {
            center,
            radius,
            helly: true,
            tangency: None,
        });
    }
    let tangency = tangency_data(poly, tri, disks, center, radius)?;
    Ok(MinDiskResult {
        center,
        radius,
        helly: false,
        tangency: Some(tangency),
    })
}

enum Minimized<S> {
    At(Point2<S>),
    HellyWitness(Point2<S>, S),
}

/// Pattern search over the polygon followed by Newton equalization.
fn minimize<S: Scalar>(field: &DepthField<S>, r_scale: S) -> Result<Minimized<S>> {
    let poly = field.poly;
    let diam = poly.diameter();
    let helly_exit = -S::lit(1e-4) * r_scale.max(S::lit(1e-9));
    let mut order: Vec<usize> = (0..field.disks.len()).collect();

    // Seed with the best triangle centroid or disk center.
    let mut starts: Vec<Point2<S>> = field.disks.iter().map(|d| d.center).collect();
    let third = S::one() / S::lit(3.0);
    for t in &field.tri.triangles {
        let c = (poly.vertex(t[0]) + poly.vertex(t[1]) + poly.vertex(t[2])) * third;
        if poly.locate(c) != PointLocation::Outside {
            starts.push(c);
        }
    }
    let mut x = starts[0];
    let mut fx = S::infinity();
    for s in starts {
        if let Some(v) = field.eval_pruned(s, fx, &mut order)? {
            fx = v;
            x = s;
            if fx <= helly_exit {
                return Ok(Minimized::HellyWitness(x, fx));
            }
        }
    }

    // Rotating compass search: 8 probe directions, golden-angle offset per
    // round so kink valleys cannot hide between directions.
    let mut step = diam / S::lit(8.0);
    let step_min = diam * S::lit(1e-12);
    let golden = S::lit(2.399963229728653);
    let mut offset = S::zero();
    let dirs = 8usize;
    let mut rounds = 0usize;
    while step > step_min && rounds < 400 {
        rounds += 1;
        let mut best = fx;
        let mut best_p = x;
        for k in 0..dirs {
            let ang = offset
                + S::from_usize(k).unwrap() * S::two() * S::PI() / S::from_usize(dirs).unwrap();
            let probe = x + Point2::new(ang.cos(), ang.sin()) * step;
            if poly.locate(probe) == PointLocation::Outside {
                continue;
            }
            if let Some(v) = field.eval_pruned(probe, best, &mut order)? {
                best = v;
                best_p = probe;
            }
        }
        if best < fx {
            x = best_p;
            fx = best;
            if fx <= helly_exit {
                return Ok(Minimized::HellyWitness(x, fx));
            }
            step = (step * S::lit(1.6)).min(diam / S::lit(4.0));
            offset = offset + golden;
            continue;
        }
        // Compass round failed; follow the active-set subgradient, which
        // still descends inside narrow two-disk valleys.
        let mut moved = false;
        if let Some(dir) = field.active_descent_direction(x, step * S::two())? {
            for mult in [S::one(), S::lit(4.0)] {
                let probe = x + dir * (step * mult);
                if poly.locate(probe) == PointLocation::Outside {
                    continue;
                }
                if let Some(v) = field.eval_pruned(probe, fx, &mut order)? {
                    x = probe;
                    fx = v;
                    moved = true;
                    if fx <= helly_exit {
                        return Ok(Minimized::HellyWitness(x, fx));
                    }
                    break;
                }
            }
        }
        if !moved {
            step = step * S::half();
        }
        offset = offset + golden;
    }

    // Newton equalization of the three deepest disks; this is exact at the
    // generic minimum, where exactly three disks are tangent.
    if field.disks.len() >= 3 {
        if let Some(polished) = newton_equalize(field, x)? {
            let fp = field.eval(polished)?;
            if fp <= fx + S::lit(1e-9) * diam.max(S::one()) {
                return Ok(Minimized::At(polished));
            }
        }
    }
    Ok(Minimized::At(x))
}

fn newton_equalize<S: Scalar>(
    field: &DepthField<S>,
    start: Point2<S>,
) -> Result<Option<Point2<S>>> {
    let ranked = field.ranked(start)?;
    let (ia, ib, ic) = (ranked[0].0, ranked[1].0, ranked[2].0);
    let mut x = start;
    let scale = field.poly.diameter().max(S::one());
    for _ in 0..40 {
        let fa = field.distance_to_center(ia, x)? - field.disks[ia].radius;
        let fb = field.distance_to_center(ib, x)? - field.disks[ib].radius;
        let fc = field.distance_to_center(ic, x)? - field.disks[ic].radius;
        let g1 = fa - fb;
        let g2 = fa - fc;
        if g1.abs().max(g2.abs()) <= S::lit(1e-15) * scale {
            return Ok(Some(x));
        }
        let ga = field.distance_gradient(ia, x)?;
        let gb = field.distance_gradient(ib, x)?;
        let gc = field.distance_gradient(ic, x)?;
        let r1 = ga - gb;
        let r2 = ga - gc;
        let det = r1.x * r2.y - r1.y * r2.x;
        if det.abs() <= S::lit(1e-14) {
            return Ok(None);
        }
        let dx = (-g1 * r2.y + g2 * r1.y) / det;
        let dy = (-g2 * r1.x + g1 * r2.x) / det;
        let delta = Point2::new(dx, dy);
        if delta.norm() > scale * S::half() {
            return Ok(None);
        }
        let next = x + delta;
        if field.poly.locate(next) == PointLocation::Outside {
            return Ok(None);
        }
        x = next;
        if delta.norm() <= S::lit(1e-16) * scale {
            return Ok(Some(x));
        }
    }
    Ok(Some(x))
}

/// Tangency points and tangent lines of the minimal disk.
///
/// The tangency point toward disk `i` is the point of the geodesic from the
/// center to `c_i` at arc length `radius`; the tangent line is perpendicular
/// to the geodesic's direction there. When more than three disks are
/// tangent, the chosen triple maximizes the minimum pairwise angular
/// separation around the center, among triples that strictly contain it.
pub fn tangency_data<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
    center: Point2<S>,
    radius: S,
) -> Result<TangencyData<S>> {
    let rooted = root_at(poly, tri, center)?;
    let tau = S::lit(tol::TAU_TAN) * radius.max(S::lit(1e-12));
    let mut tangent: Vec<(usize, Point2<S>, Line2<S>, S)> = Vec::new();
    for (i, disk) in disks.iter().enumerate() {
        let path = rooted.path_to(poly, tri, disk.center)?;
        let residual = (path.length - disk.radius) - radius;
        if residual.abs() <= tau {
            if path.length < radius {
                return Err(Error::TangencyNotFound(i));
            }
            let point = path.point_at(radius);
            let dir = path.direction_at(radius);
            let line = Line2::new(point, dir.perp());
            let angle = (point - center).angle();
            tangent.push((i, point, line, angle));
        }
    }
    if tangent.len() < 3 {
        return Err(Error::OptimizerStalled {
            x: center.x.as_f64(),
            y: center.y.as_f64(),
            best_depth: radius.as_f64(),
            reason: "fewer than three tangent disks at the minimizer",
        });
    }

    let mut best: Option<([usize; 3], S)> = None;
    let m = tangent.len();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                let (ta, tb, tc) = (&tangent[a], &tangent[b], &tangent[c]);
                // The center must be strictly inside the tangency triangle.
                let s1 = orient_sign(ta.1, tb.1, center);
                let s2 = orient_sign(tb.1, tc.1, center);
                let s3 = orient_sign(tc.1, ta.1, center);
                if !(s1 == s2 && s2 == s3 && s1 != 0) {
                    continue;
                }
                let sep = min_angular_separation(&[ta.3, tb.3, tc.3]);
                if best.is_none_or(|(_, s)| sep > s) {
                    best = Some(([a, b, c], sep));
                }
            }
        }
    }
    let Some(([a, b, c], _)) = best else {
        return Err(Error::OptimizerStalled {
            x: center.x.as_f64(),
            y: center.y.as_f64(),
            best_depth: radius.as_f64(),
            reason: "no tangent triple strictly contains the center",
        });
    };
    Ok(TangencyData {
        indices: [tangent[a].0, tangent[b].0, tangent[c].0],
        points: [tangent[a].1, tangent[b].1, tangent[c].1],
        lines: [tangent[a].2, tangent[b].2, tangent[c].2],
    })
}

fn min_angular_separation<S: Scalar>(angles: &[S; 3]) -> S {
    let mut sep = S::infinity();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mut d = (angles[i] - angles[j]).abs();
            if d > S::PI() {
                d = S::two() * S::PI() - d;
            }
            sep = sep.min(d);
        }
    }
    sep
}

/// Probes `count` points at `dist` around the center; true when none
/// improves the depth by more than `tol`.
pub fn local_optimality_probes<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
    center: Point2<S>,
    dist: S,
    count: usize,
    tolerance: S,
) -> Result<bool> {
    let field = DepthField::new(poly, tri, disks)?;
    let fc = field.eval(center)?;
    for k in 0..count {
        let ang = S::two() * S::PI() * S::from_usize(k).unwrap() / S::from_usize(count).unwrap();
        let p = center + Point2::new(ang.cos(), ang.sin()) * dist;
        if poly.locate(p) == PointLocation::Outside {
            continue;
        }
        if fc > field.eval(p)? + tolerance {
            return Ok(false);
        }
    }
    Ok(true)
}
