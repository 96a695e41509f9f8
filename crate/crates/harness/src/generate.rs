//! Randomized instance generation.
//!
//! Polygons come from an angular sort of random points around their centroid
//! followed by 2-opt uncrossing; disk radii are set to half the maximum
//! pairwise distance (scaled up by a random margin), which forces pairwise
//! intersection. Everything is deterministic per seed.

use geopierce_core::geodesic::{root_at, GeodesicDisk};
use geopierce_core::kernel::{
    segments_cross_properly, triangulate, EarOrder, PointLocation, SimplePolygon,
};
use geopierce_core::{Point, Polygon};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{HarnessError, Instance, Result};

const SPAN: f64 = 12.0;
const MAX_ATTEMPTS: usize = 32;

/// Generates a deterministic random instance with `n` polygon vertices and
/// `m` pairwise intersecting disks.
pub fn generate_instance(seed: u64, n: usize, m: usize) -> Result<Instance> {
    generate_with_margin(seed, n, m, 0.3, "random")
}

/// Like [`generate_instance`] but with almost no slack on the radii, which
/// makes the minimal disk genuinely pinned by three disks far more often.
/// Used to exercise the non-Helly construction.
pub fn generate_tight_instance(seed: u64, n: usize, m: usize) -> Result<Instance> {
    generate_with_margin(seed, n, m, 0.015, "tight")
}

fn generate_with_margin(
    seed: u64,
    n: usize,
    m: usize,
    rho_max: f64,
    tag: &str,
) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polygon = random_polygon(&mut rng, n)?;
    let centers = sample_interior_points(&mut rng, &polygon, m);
    let tri = triangulate(&polygon, EarOrder::Forward)?;

    let mut disks = Vec::with_capacity(m);
    if m == 1 {
        let rho = rng.random_range(0.0..rho_max);
        let radius = polygon.diameter() / 8.0 * (1.0 + rho);
        disks.push(GeodesicDisk::new(centers[0], radius)?);
    } else {
        // Half the farthest pairwise distance guarantees every pair meets:
        // d(i,j) <= d_max(i)/2 + d_max(j)/2 <= r_i + r_j.
        let mut far = vec![0.0f64; m];
        for i in 0..m {
            let rooted = root_at(&polygon, &tri, centers[i])?;
            for j in (i + 1)..m {
                let d = rooted.distance_to(&polygon, &tri, centers[j])?;
                far[i] = far[i].max(d);
                far[j] = far[j].max(d);
            }
        }
        for (i, &center) in centers.iter().enumerate() {
            let rho = rng.random_range(0.0..rho_max);
            let radius = (far[i] / 2.0 * (1.0 + rho)).max(1e-3);
            disks.push(GeodesicDisk::new(center, radius)?);
        }
    }
    Ok(Instance::new(polygon, disks, format!("{tag}-{seed}"), seed))
}

/// Generates an instance whose disks all contain a common witness point
/// with positive margin.
pub fn generate_helly_instance(seed: u64, n: usize, m: usize) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x48454C4C59);
    let polygon = random_polygon(&mut rng, n)?;
    let tri = triangulate(&polygon, EarOrder::Forward)?;
    let witness = sample_interior_points(&mut rng, &polygon, 1)[0];
    let rooted = root_at(&polygon, &tri, witness)?;
    let centers = sample_interior_points(&mut rng, &polygon, m);
    let mut disks = Vec::with_capacity(m);
    for &c in &centers {
        let d = rooted.distance_to(&polygon, &tri, c)?;
        let margin = rng.random_range(0.05..0.3);
        let radius = (d * (1.0 + margin)).max(polygon.diameter() * 1e-3);
        disks.push(GeodesicDisk::new(c, radius)?);
    }
    Ok(Instance::new(polygon, disks, format!("helly-{seed}"), seed))
}

/// Random simple polygon: angular sort around the centroid, then 2-opt
/// uncrossing, then full validation. Retries with fresh points as needed.
pub fn random_polygon(rng: &mut ChaCha8Rng, n: usize) -> Result<Polygon> {
    for _ in 0..MAX_ATTEMPTS {
        let mut pts: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.random_range(0.0..SPAN), rng.random_range(0.0..SPAN)))
            .collect();
        let cx = pts.iter().map(|p| p.x).sum::<f64>() / n as f64;
        let cy = pts.iter().map(|p| p.y).sum::<f64>() / n as f64;
        pts.sort_by(|a, b| {
            let aa = (a.y - cy).atan2(a.x - cx);
            let ab = (b.y - cy).atan2(b.x - cx);
            aa.partial_cmp(&ab)
                .unwrap()
                .then(a.norm2().partial_cmp(&b.norm2()).unwrap())
        });
        if !two_opt_uncross(&mut pts) {
            continue;
        }
        if let Ok(poly) = SimplePolygon::validate(pts) {
            return Ok(poly);
        }
    }
    Err(HarnessError::GenerationFailed(MAX_ATTEMPTS))
}

/// Repairs edge crossings by reversing the chain between the crossing
/// edges; returns false when the swap budget runs out.
fn two_opt_uncross(pts: &mut [Point]) -> bool {
    let n = pts.len();
    let mut budget = 20 * n * n;
    loop {
        let mut crossed = false;
        'scan: for i in 0..n {
            for j in (i + 1)..n {
                if (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (a1, a2) = (pts[i], pts[(i + 1) % n]);
                let (b1, b2) = (pts[j], pts[(j + 1) % n]);
                if segments_cross_properly(a1, a2, b1, b2) {
                    pts[(i + 1)..=j].reverse();
                    crossed = true;
                    if budget == 0 {
                        return false;
                    }
                    budget -= 1;
                    break 'scan;
                }
            }
        }
        if !crossed {
            return true;
        }
    }
}

fn sample_interior_points(rng: &mut ChaCha8Rng, poly: &Polygon, count: usize) -> Vec<Point> {
    let (lo, hi) = poly.bbox();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point::new(rng.random_range(lo.x..hi.x), rng.random_range(lo.y..hi.y));
        if poly.locate(p) == PointLocation::Inside {
            out.push(p);
        }
    }
    out
}
