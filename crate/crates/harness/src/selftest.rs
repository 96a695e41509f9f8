//! Instance-independent numeric self-checks.
//!
//! The first group pins the hand computations behind the construction: the
//! wedge-corner constant, the tangent-corner closed form, the seven interval
//! inequalities protecting the first-quadrant guard and the auxiliary
//! closed forms they rest on. The second group runs quick invariant suites
//! over the geometry modules.

use geopierce_core::frame::wedge_corner_coordinate;
use geopierce_core::kernel::{orient_sign, triangulate, EarOrder, Line2};
use geopierce_core::piercing::compute_piercing_set;
use geopierce_core::Point;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::generate::generate_instance;
use crate::verify::verify_piercing;

#[derive(Debug, Clone)]
pub struct SelfTestItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SelfTestReport {
    pub items: Vec<SelfTestItem>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&format!(
                "[{}] {:<44} {}\n",
                if item.passed { "pass" } else { "FAIL" },
                item.name,
                item.detail
            ));
        }
        out
    }
}

/// Interval endpoints along the upper-right wedge segment used by the
/// guard-distance ledger.
pub fn guard_ledger_breakpoints() -> [f64; 8] {
    [
        1.5,
        1.52,
        1.56,
        1.63,
        1.74,
        1.9,
        2.15,
        3.0 * (2.0 + 2f64.sqrt()) / 4.0,
    ]
}

/// Auxiliary-circle intersection points, one per ledger interval.
pub fn guard_ledger_points() -> [(f64, f64); 7] {
    [
        (1.8033, 0.5955),
        (1.8152, 0.5792),
        (1.8347, 0.5507),
        (1.8623, 0.5063),
        (1.8966, 0.4429),
        (1.9376, 0.3478),
        (1.9787, 0.2053),
    ]
}

/// Height of the upper-right wedge segment at abscissa `x` (the segment from
/// the second axis point to the first wedge corner).
pub fn wedge_segment_height(x: f64) -> f64 {
    (4.0 * 2f64.sqrt() - 5.0) * x / 3.0 + 2.0
}

/// Closed-form auxiliary-circle intersection of the guard tangent through a
/// top-window point at abscissa `b`.
pub fn guard_tangent_intersection(b: f64) -> (f64, f64) {
    let s = (4.0 + b * b).sqrt();
    let root = (s - 1.0).sqrt();
    let gx = (b * b + 2.0 * s + 2.0 * b * root) / (4.0 + b * b);
    let gy = (2.0 * b - b * s + 4.0 * root) / (4.0 + b * b);
    (gx, gy)
}

/// All instance-independent checks.
pub fn run() -> SelfTestReport {
    let mut items = Vec::new();

    // 1. Wedge-corner constant solves the equidistance system.
    {
        let a: f64 = wedge_corner_coordinate();
        let z1 = Point::new(a, a);
        let d1 = z1.dist(Point::new(2.0, 0.0));
        let d2 = z1.dist(Point::new(0.0, 2.0));
        let d3 = z1.norm() - 1.0;
        let worst = (d1 - d2).abs().max((d1 - d3).abs());
        items.push(SelfTestItem {
            name: "wedge corner equidistance",
            passed: worst <= 1e-12 && (a - 2.56).abs() < 0.01,
            detail: format!("a = {a:.10}, residual {worst:.3e}"),
        });
    }

    // 2a. Tangent-corner closed form at the pi/5 angle.
    {
        let alpha = std::f64::consts::PI / 5.0;
        let horizontal = Line2::new(Point::new(0.0, -1.0), Point::new(1.0, 0.0));
        let touch = Point::new(alpha.sin(), alpha.cos());
        let steep = Line2::new(touch, touch.perp());
        let corner = steep.intersect(horizontal).unwrap();
        let closed_form = Point::new((alpha.cos() + 1.0) / alpha.sin(), -1.0);
        let err = corner.dist(closed_form);
        items.push(SelfTestItem {
            name: "tangent corner closed form at pi/5",
            passed: err <= 1e-9,
            detail: format!(
                "corner ({:.9}, {:.9}), deviation {err:.3e}",
                corner.x, corner.y
            ),
        });

        // 2b. Incidence of the corner normal with the fourth wedge corner.
        let a: f64 = wedge_corner_coordinate();
        let z4 = Point::new(a, -a);
        let dist = (z4.dot(corner) - corner.norm2()).abs() / corner.norm();
        items.push(SelfTestItem {
            name: "corner normal through wedge corner 4 at pi/5",
            passed: dist <= 1e-9,
            detail: format!("point-line distance {dist:.6e}"),
        });
    }

    // 3. Seven guard-distance interval inequalities, densely sampled.
    {
        let bp = guard_ledger_breakpoints();
        let gs = guard_ledger_points();
        let mut worst = f64::NEG_INFINITY;
        let mut failures = 0usize;
        for i in 0..7 {
            let (gx, gy) = gs[i];
            for k in 0..=1000 {
                let ax = bp[i] + (bp[i + 1] - bp[i]) * k as f64 / 1000.0;
                let ay = wedge_segment_height(ax);
                let lhs = ((ax - gx).powi(2) + (ay - gy).powi(2)).sqrt();
                let rhs = (ax * ax + ay * ay).sqrt() - 1.0;
                let margin = rhs - lhs;
                if margin < -1e-12 {
                    failures += 1;
                }
                worst = worst.max(lhs - rhs);
            }
        }
        items.push(SelfTestItem {
            name: "guard-distance interval inequalities",
            passed: failures == 0,
            detail: format!("7 x 1001 samples, worst lhs-rhs {worst:.3e}"),
        });
    }

    // 4. The tangent intersection never falls behind the window abscissa.
    {
        let mut ok = true;
        let mut worst = f64::INFINITY;
        for k in 1..=1500 {
            let b = 1.5 * k as f64 / 1500.0;
            let (gx, _) = guard_tangent_intersection(b);
            worst = worst.min(gx - b);
            if gx < b {
                ok = false;
            }
        }
        items.push(SelfTestItem {
            name: "guard tangent stays ahead of the window",
            passed: ok,
            detail: format!("min gx - b = {worst:.3e} over (0, 1.5]"),
        });
    }

    // 5. End inequality: both sides approach 4 at zero, strict in between.
    {
        let lhs = |b: f64| (3.0 - (4.0 + b * b).sqrt()) * (4.0 + b * b);
        let rhs = |b: f64| {
            let s = (4.0 + b * b).sqrt();
            2.0 * b - b * s + 4.0 * (s - 1.0).sqrt()
        };
        let at_zero = (lhs(0.0) - 4.0).abs().max((rhs(0.0) - 4.0).abs());
        let mut strict = true;
        for k in 1..=1500 {
            let b = 1.5 * k as f64 / 1500.0;
            if lhs(b) >= rhs(b) {
                strict = false;
            }
        }
        items.push(SelfTestItem {
            name: "guard end inequality",
            passed: at_zero <= 1e-9 && strict,
            detail: format!("|sides - 4| at 0: {at_zero:.3e}, strict on (0, 1.5]: {strict}"),
        });
    }

    // Quick module invariant suites.
    items.push(orientation_suite());
    items.push(triangulation_suite());
    items.push(pipeline_suite());

    SelfTestReport { items }
}

fn orientation_suite() -> SelfTestItem {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = true;
    for _ in 0..2000 {
        let mut p = || Point::new(rng_val(&mut rng), rng_val(&mut rng));
        let (a, b, c) = (p(), p(), p());
        if orient_sign(a, b, c) != -orient_sign(b, a, c) {
            ok = false;
        }
    }
    SelfTestItem {
        name: "orientation antisymmetry",
        passed: ok,
        detail: "2000 random triples".to_string(),
    }
}

fn rng_val(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(-100.0..100.0)
}

fn triangulation_suite() -> SelfTestItem {
    let mut ok = true;
    let mut detail = String::new();
    for seed in 0..16 {
        match generate_instance(seed, 8 + (seed as usize % 24), 1) {
            Ok(inst) => {
                for order in [EarOrder::Forward, EarOrder::Backward] {
                    match triangulate(&inst.polygon, order) {
                        Ok(t) => {
                            if t.triangles.len() != inst.polygon.len() - 2 {
                                ok = false;
                                detail = format!("seed {seed}: wrong triangle count");
                            }
                        }
                        Err(e) => {
                            ok = false;
                            detail = format!("seed {seed}: {e}");
                        }
                    }
                }
            }
            Err(e) => {
                ok = false;
                detail = format!("seed {seed}: {e}");
            }
        }
    }
    if detail.is_empty() {
        detail = "16 generated polygons, both ear orders".to_string();
    }
    SelfTestItem {
        name: "triangulation count",
        passed: ok,
        detail,
    }
}

fn pipeline_suite() -> SelfTestItem {
    let mut ok = true;
    let mut detail = String::new();
    for seed in [3u64, 11, 27] {
        let inst = match generate_instance(seed, 18, 7) {
            Ok(i) => i,
            Err(e) => {
                return SelfTestItem {
                    name: "pipeline determinism and completeness",
                    passed: false,
                    detail: e.to_string(),
                }
            }
        };
        let a = compute_piercing_set(&inst.polygon, &inst.disks);
        let b = compute_piercing_set(&inst.polygon, &inst.disks);
        match (a, b) {
            (Ok(sa), Ok(sb)) => {
                if sa.provenance != sb.provenance {
                    ok = false;
                    detail = format!("seed {seed}: provenance differs between runs");
                }
                match verify_piercing(&inst, &sa.points, sa.case.as_str(), 1e-7) {
                    Ok(rep) if rep.all_pierced() => {}
                    Ok(rep) => {
                        ok = false;
                        detail = format!("seed {seed}: max violation {:.3e}", rep.max_violation);
                    }
                    Err(e) => {
                        ok = false;
                        detail = format!("seed {seed}: {e}");
                    }
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                ok = false;
                detail = format!("seed {seed}: {e}");
            }
        }
    }
    if detail.is_empty() {
        detail = "3 seeds, repeated runs".to_string();
    }
    SelfTestItem {
        name: "pipeline determinism and completeness",
        passed: ok,
        detail,
    }
}
