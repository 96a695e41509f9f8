//! SVG rendering for instances, piercing sets and verification reports.

use geopierce_core::geodesic::{root_at, GeodesicDisk};
use geopierce_core::kernel::{triangulate, EarOrder, Triangulation};
use geopierce_core::piercing::PiercingSet;
use geopierce_core::{Point, Polygon, Real};

use crate::{Instance, Result, VerificationReport};

/// Renders an instance (plus optional piercing set and report) as a
/// standalone SVG document. Output is deterministic for fixed inputs.
pub fn render_svg(
    instance: &Instance,
    set: Option<&PiercingSet<Real>>,
    report: Option<&VerificationReport>,
) -> Result<String> {
    let tri = triangulate(&instance.polygon, EarOrder::Forward)?;
    let (lo, hi) = instance.polygon.bbox();
    let margin = (hi - lo).norm() * 0.05 + 0.1;
    let min = Point::new(lo.x - margin, lo.y - margin);
    let max = Point::new(hi.x + margin, hi.y + margin);
    let flip = |p: Point| Point::new(p.x, max.y + min.y - p.y);
    let sw = (max - min).norm() / 600.0;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt(min.x),
        fmt(min.y),
        fmt(max.x - min.x),
        fmt(max.y - min.y)
    ));

    // Polygon outline.
    out.push_str("<path d=\"");
    for (i, v) in instance.polygon.vertices().iter().enumerate() {
        let p = flip(*v);
        out.push_str(&format!(
            "{}{} {} ",
            if i == 0 { "M" } else { "L" },
            fmt(p.x),
            fmt(p.y)
        ));
    }
    out.push_str(&format!(
        "Z\" fill=\"#f7f6f2\" stroke=\"#333333\" stroke-width=\"{}\"/>\n",
        fmt(sw * 2.0)
    ));

    // Disk rings and centers.
    for disk in &instance.disks {
        let ring = ball_boundary(&instance.polygon, &tri, disk, 256)?;
        out.push_str("<polygon points=\"");
        for p in &ring {
            let q = flip(*p);
            out.push_str(&format!("{},{} ", fmt(q.x), fmt(q.y)));
        }
        out.push_str(&format!(
            "\" fill=\"none\" stroke=\"#4a7dae\" stroke-width=\"{}\" opacity=\"0.75\"/>\n",
            fmt(sw)
        ));
        let c = flip(disk.center);
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#4a7dae\"/>\n",
            fmt(c.x),
            fmt(c.y),
            fmt(sw * 2.5)
        ));
    }

    // Minimal disk and piercing points.
    if let Some(set) = set {
        let md = &set.min_disk;
        if md.radius > 0.0 {
            let ring = ball_boundary(
                &instance.polygon,
                &tri,
                &GeodesicDisk::new(md.center, md.radius)?,
                256,
            )?;
            out.push_str("<polygon points=\"");
            for p in &ring {
                let q = flip(*p);
                out.push_str(&format!("{},{} ", fmt(q.x), fmt(q.y)));
            }
            out.push_str(&format!(
                "\" fill=\"none\" stroke=\"#777744\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
                fmt(sw),
                fmt(sw * 6.0),
                fmt(sw * 4.0)
            ));
        }
        for (p, tag) in set.points.iter().zip(&set.provenance) {
            let q = flip(*p);
            let r = sw * 6.0;
            out.push_str(&format!(
                "<path d=\"M{} {} L{} {} M{} {} L{} {}\" stroke=\"#b2292e\" stroke-width=\"{}\"/>\n",
                fmt(q.x - r),
                fmt(q.y - r),
                fmt(q.x + r),
                fmt(q.y + r),
                fmt(q.x - r),
                fmt(q.y + r),
                fmt(q.x + r),
                fmt(q.y - r),
                fmt(sw * 1.5)
            ));
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#b2292e\">{}</text>\n",
                fmt(q.x + r * 1.3),
                fmt(q.y - r * 0.5),
                fmt(sw * 16.0),
                tag
            ));
        }
    }

    if let Some(rep) = report {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#333333\">pierced {}/{} case {}</text>\n",
            fmt(min.x + margin * 0.3),
            fmt(min.y + margin * 0.8),
            fmt(sw * 18.0),
            rep.pierced_count,
            rep.per_disk.len(),
            rep.case
        ));
    }

    out.push_str("</svg>\n");
    Ok(out)
}

fn fmt(v: f64) -> String {
    format!("{v:.5}")
}

/// Samples the geodesic ball boundary in `dirs` directions by radial
/// bisection: per direction, the farthest in-polygon ray point within
/// geodesic distance `radius` of the center.
pub fn ball_boundary(
    poly: &Polygon,
    tri: &Triangulation,
    disk: &GeodesicDisk<Real>,
    dirs: usize,
) -> Result<Vec<Point>> {
    let rooted = root_at(poly, tri, disk.center)?;
    let mut out = Vec::with_capacity(dirs);
    for k in 0..dirs {
        let ang = 2.0 * std::f64::consts::PI * k as f64 / dirs as f64;
        let dir = Point::new(ang.cos(), ang.sin());
        let intervals = ray_intervals(poly, disk.center, dir, disk.radius);
        let mut best = disk.center;
        for (t0, t1) in intervals {
            let d_end = rooted.distance_to(poly, tri, disk.center + dir * t1)?;
            if d_end <= disk.radius {
                best = disk.center + dir * t1;
                continue;
            }
            let d_start = rooted.distance_to(poly, tri, disk.center + dir * t0)?;
            if d_start > disk.radius {
                continue;
            }
            let (mut lo, mut hi) = (t0, t1);
            for _ in 0..30 {
                let mid = (lo + hi) * 0.5;
                let d = rooted.distance_to(poly, tri, disk.center + dir * mid)?;
                if d <= disk.radius {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            best = disk.center + dir * lo;
        }
        out.push(best);
    }
    Ok(out)
}

/// In-polygon intervals of the ray `origin + t * dir`, `0 <= t <= cap`,
/// ordered by `t`.
fn ray_intervals(poly: &Polygon, origin: Point, dir: Point, cap: Real) -> Vec<(Real, Real)> {
    let mut cuts: Vec<Real> = vec![0.0];
    for (a, b) in poly.edges() {
        let e = b - a;
        let denom = dir.cross(e);
        if denom.abs() <= 1e-15 {
            continue;
        }
        let t = (a - origin).cross(e) / denom;
        let u = (a - origin).cross(dir) / denom;
        if t > 0.0 && t < cap && (0.0..=1.0).contains(&u) {
            cuts.push(t);
        }
    }
    cuts.push(cap);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        if t1 - t0 <= 1e-12 {
            continue;
        }
        let mid = origin + dir * ((t0 + t1) * 0.5);
        if poly.locate(mid) != geopierce_core::kernel::PointLocation::Outside {
            out.push((t0, t1));
        }
    }
    out
}
