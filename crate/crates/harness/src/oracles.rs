//! Independent verification oracles.
//!
//! The geodesic-distance oracle runs Dijkstra over the visibility graph
//! spanned by the polygon vertices and the two query points; it shares only
//! the segment-containment primitive with the production path machinery, not
//! the sleeve-and-funnel code it is meant to check.

use geopierce_core::kernel::Segment2;
use geopierce_core::{Point, Polygon, Real};

/// Geodesic distance via visibility-graph Dijkstra.
pub fn visibility_graph_distance(poly: &Polygon, s: Point, t: Point) -> Real {
    let mut nodes: Vec<Point> = vec![s, t];
    nodes.extend_from_slice(poly.vertices());
    let m = nodes.len();
    let mut dist = vec![f64::INFINITY; m];
    let mut done = vec![false; m];
    dist[0] = 0.0;
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
                if dist[u] + w < dist[v]
                    && poly.segment_in_polygon_unchecked(Segment2::new(nodes[u], nodes[v]))
                {
                    dist[v] = dist[u] + w;
                }
            }
        }
    }
    dist[1]
}
