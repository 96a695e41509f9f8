//! Funnel (string pulling) over a triangle sleeve.

use crate::kernel::{orient_sign, Point2};
use crate::scalar::Scalar;

/// Pulls the taut path from `start` to `goal` through the ordered portal
/// list. Portals are pairs of polygon vertex indices on the shared diagonals
/// of consecutive sleeve triangles, ordered from the `start` side.
///
/// Point equality is exact: portal points come from the shared vertex array,
/// so coincident funnel points (including a query point sitting on a portal
/// vertex) compare equal bitwise.
///
/// Returns the waypoint list including both endpoints.
pub fn pull_string<S: Scalar>(
    start: Point2<S>,
    goal: Point2<S>,
    portals: &[(usize, usize)],
    vertex: &dyn Fn(usize) -> Point2<S>,
) -> Vec<Point2<S>> {
    if portals.is_empty() {
        if start == goal {
            return vec![start];
        }
        return vec![start, goal];
    }

    // Orient each portal structurally: consecutive portals share exactly one
    // vertex, so left/right only needs a geometric decision on the first one.
    let mut oriented: Vec<(Point2<S>, Point2<S>)> = Vec::with_capacity(portals.len() + 1);
    {
        let (u, v) = portals[0];
        let (pu, pv) = (vertex(u), vertex(v));
        let mut s = orient_sign(start, pu, pv);
        if s == 0 {
            // Start lies on the first portal line: decide from the goal side,
            // where left and right appear swapped.
            s = -orient_sign(goal, pu, pv);
        }
        // Convention: `l` on the walker's left means orient(start, l, r) < 0.
        let (l, r) = if s < 0 { (pu, pv) } else { (pv, pu) };
        oriented.push((l, r));
    }
    for w in portals.windows(2) {
        let (pl, pr) = *oriented.last().unwrap();
        let (u, v) = w[1];
        let (cu, cv) = (vertex(u), vertex(v));
        // The endpoint shared with the previous portal keeps its side.
        let (l, r) = if cu == pl || cv == pr {
            (cu, cv)
        } else if cv == pl || cu == pr {
            (cv, cu)
        } else {
            // Sleeve property: consecutive portals share a vertex.
            unreachable!("portals do not form a sleeve");
        };
        oriented.push((l, r));
    }
    oriented.push((goal, goal));

    let mut waypoints: Vec<Point2<S>> = vec![start];
    let mut apex = start;
    let mut left = oriented[0].0;
    let mut right = oriented[0].1;
    let mut left_i = 0usize;
    let mut right_i = 0usize;

    let mut i = 1usize;
    while i < oriented.len() {
        let (cl, cr) = oriented[i];

        // Tighten the right boundary.
        if cr == right {
            right_i = i;
        } else if cr != apex {
            let widen = right != apex && orient_sign(apex, right, cr) < 0;
            if !widen {
                let crossed = left != apex && orient_sign(apex, left, cr) >= 0;
                if crossed {
                    // Right swept over the left boundary: the path turns at left.
                    waypoints.push(left);
                    apex = left;
                    right = apex;
                    right_i = left_i;
                    i = left_i + 1;
                    continue;
                }
                right = cr;
                right_i = i;
            }
        }

        // Tighten the left boundary (mirror image).
        if cl == left {
            left_i = i;
        } else if cl != apex {
            let widen = left != apex && orient_sign(apex, left, cl) > 0;
            if !widen {
                let crossed = right != apex && orient_sign(apex, right, cl) <= 0;
                if crossed {
                    waypoints.push(right);
                    apex = right;
                    left = apex;
                    left_i = right_i;
                    i = right_i + 1;
                    continue;
                }
                left = cl;
                left_i = i;
            }
        }

        i += 1;
    }

    if *waypoints.last().unwrap() != goal {
        waypoints.push(goal);
    }

    let mut out: Vec<Point2<S>> = Vec::with_capacity(waypoints.len());
    for w in waypoints {
        if out.last().is_none_or(|&last| last != w) {
            out.push(w);
        }
    }
    out
}
