//! Shared test utilities: random instances and independent oracles.
#![allow(dead_code)] // each test binary uses a different subset
//!
//! Everything in here deliberately avoids the library's path machinery so it
//! can serve as an oracle for it: distances come from Dijkstra over the
//! visibility graph, membership from a winding-number count.

use geopierce_core::kernel::{segments_cross_properly, Point2, Segment2, SimplePolygon};

pub type P = Point2<f64>;

pub struct TestRng(u64);

/// Tiny deterministic RNG (splitmix64) so the oracle suite does not share
/// randomness with the crate under test.
impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.wrapping_add(0x9E3779B97F4A7C15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn index(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Random simple polygon: points angularly sorted around their centroid,
/// then 2-opt uncrossing until the loop is simple.
pub fn random_simple_polygon(rng: &mut TestRng, n: usize, span: f64) -> SimplePolygon<f64> {
    loop {
        let mut pts: Vec<P> = (0..n)
            .map(|_| P::of(rng.range(0.0, span), rng.range(0.0, span)))
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
        if two_opt_uncross(&mut pts) {
            if let Ok(poly) = SimplePolygon::validate(pts) {
                return poly;
            }
        }
    }
}

pub fn two_opt_uncross(pts: &mut [P]) -> bool {
    let n = pts.len();
    let mut budget = 20 * n * n;
    loop {
        let mut crossed = false;
        'outer: for i in 0..n {
            for j in (i + 1)..n {
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
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
                    break 'outer;
                }
            }
        }
        if !crossed {
            return true;
        }
    }
}

/// Winding-number membership oracle (strictly inside).
pub fn winding_inside(poly: &SimplePolygon<f64>, p: P) -> bool {
    let verts = poly.vertices();
    let n = verts.len();
    let mut wn = 0i32;
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && (b - a).cross(p - a) > 0.0 {
                wn += 1;
            }
        } else if b.y <= p.y && (b - a).cross(p - a) < 0.0 {
            wn -= 1;
        }
    }
    wn != 0
}

pub fn random_interior_point(rng: &mut TestRng, poly: &SimplePolygon<f64>) -> P {
    let (lo, hi) = poly.bbox();
    loop {
        let p = P::of(rng.range(lo.x, hi.x), rng.range(lo.y, hi.y));
        if winding_inside(poly, p) && poly.boundary_distance(p) > 1e-7 {
            return p;
        }
    }
}

/// Geodesic distance oracle: Dijkstra over the visibility graph spanned by
/// the polygon vertices plus the two query points.
pub fn dijkstra_geodesic(poly: &SimplePolygon<f64>, s: P, t: P) -> f64 {
    let mut nodes: Vec<P> = vec![s, t];
    nodes.extend_from_slice(poly.vertices());
    let m = nodes.len();
    let mut dist = vec![f64::INFINITY; m];
    let mut done = vec![false; m];
    dist[0] = 0.0;
    let visible = |a: P, b: P| -> bool {
        if a == b {
            return true;
        }
        poly.segment_in_polygon_unchecked(Segment2::new(a, b))
    };
    for _ in 0..m {
        let mut u = usize::MAX;
        let mut best = f64::INFINITY;
        for v in 0..m {
            if !done[v] && dist[v] < best {
                best = dist[v];
                u = v;
            }
        }
        if u == usize::MAX || u == 1 {
            break;
        }
        done[u] = true;
        for v in 0..m {
            if !done[v] {
                let w = nodes[u].dist(nodes[v]);
                if dist[u] + w < dist[v] && visible(nodes[u], nodes[v]) {
                    dist[v] = dist[u] + w;
                }
            }
        }
    }
    dist[1]
}
