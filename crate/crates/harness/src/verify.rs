//! Piercing verification against an independently built triangulation.

use std::time::Instant;

use geopierce_core::geodesic::root_at;
use geopierce_core::kernel::{triangulate, EarOrder};
use geopierce_core::tol;
use geopierce_core::{Point, Real};

use crate::{Instance, Result};

/// Per-disk outcome: the closest piercing point and the remaining slack
/// (radius minus distance; negative means unpierced).
#[derive(Debug, Clone)]
pub struct DiskCheck {
    pub disk: usize,
    pub nearest_point: usize,
    pub slack: Real,
}

/// Verification summary for one instance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub per_disk: Vec<DiskCheck>,
    pub pierced_count: usize,
    pub max_violation: Real,
    pub case: String,
    pub runtime: std::time::Duration,
    pub tolerance: Real,
}

impl VerificationReport {
    pub fn all_pierced(&self) -> bool {
        self.pierced_count == self.per_disk.len()
    }

    /// Plain text slack table, one row per disk.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str("disk  nearest  slack\n");
        for c in &self.per_disk {
            out.push_str(&format!(
                "{:>4}  {:>7}  {:+.9e}\n",
                c.disk, c.nearest_point, c.slack
            ));
        }
        out.push_str(&format!(
            "pierced {}/{} (max violation {:+.3e}, case {}, {:.1?})\n",
            self.pierced_count,
            self.per_disk.len(),
            self.max_violation,
            self.case,
            self.runtime,
        ));
        out
    }
}

/// Checks that every disk contains at least one of the points, within
/// `tolerance`. Distances are recomputed over a triangulation built with the
/// opposite ear-clipping order to decorrelate errors from the pipeline.
pub fn verify_piercing(
    instance: &Instance,
    points: &[Point],
    case: &str,
    tolerance: Real,
) -> Result<VerificationReport> {
    assert!(!points.is_empty(), "piercing set must be nonempty");
    let start = Instant::now();
    let tri = triangulate(&instance.polygon, EarOrder::Backward)?;
    let rooted = points
        .iter()
        .map(|&p| root_at(&instance.polygon, &tri, p))
        .collect::<geopierce_core::error::Result<Vec<_>>>()?;

    let mut per_disk = Vec::with_capacity(instance.disks.len());
    let mut pierced = 0usize;
    let mut max_violation = f64::NEG_INFINITY;
    for (di, disk) in instance.disks.iter().enumerate() {
        let mut best = f64::INFINITY;
        let mut nearest = 0usize;
        for (pi, r) in rooted.iter().enumerate() {
            let d = r.distance_to(&instance.polygon, &tri, disk.center)?;
            if d < best {
                best = d;
                nearest = pi;
            }
        }
        let violation = best - disk.radius;
        max_violation = max_violation.max(violation);
        if violation <= tolerance {
            pierced += 1;
        }
        per_disk.push(DiskCheck {
            disk: di,
            nearest_point: nearest,
            slack: disk.radius - best,
        });
    }
    Ok(VerificationReport {
        per_disk,
        pierced_count: pierced,
        max_violation,
        case: case.to_string(),
        runtime: start.elapsed(),
        tolerance,
    })
}

/// Default piercing tolerance.
pub fn default_tolerance() -> Real {
    tol::TAU_PIERCE
}
