//! Instance files: a polygon plus a family of pairwise intersecting disks.

use std::path::Path;

use geopierce_core::geodesic::GeodesicDisk;
use geopierce_core::kernel::{triangulate, EarOrder, PointLocation, SimplePolygon};
use geopierce_core::mindisk::verify_pairwise;
use geopierce_core::piercing::PiercingSet;
use geopierce_core::{Point, Polygon, Real};
use serde::{Deserialize, Serialize};

use crate::{HarnessError, Result};

/// A problem instance in input coordinates.
#[derive(Debug, Clone)]
pub struct Instance {
    pub polygon: Polygon,
    pub disks: Vec<GeodesicDisk<Real>>,
    pub name: String,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct DiskFile {
    center: [f64; 2],
    radius: f64,
}

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    polygon: Vec<[f64; 2]>,
    disks: Vec<DiskFile>,
    name: String,
    seed: u64,
}

impl Instance {
    pub fn new(polygon: Polygon, disks: Vec<GeodesicDisk<Real>>, name: String, seed: u64) -> Self {
        Instance {
            polygon,
            disks,
            name,
            seed,
        }
    }

    /// Serializes to the canonical JSON layout. Numbers use the shortest
    /// round-trip decimal form, so save/load is bit-exact.
    pub fn to_json(&self) -> String {
        let file = InstanceFile {
            polygon: self.polygon.vertices().iter().map(|p| [p.x, p.y]).collect(),
            disks: self
                .disks
                .iter()
                .map(|d| DiskFile {
                    center: [d.center.x, d.center.y],
                    radius: d.radius,
                })
                .collect(),
            name: self.name.clone(),
            seed: self.seed,
        };
        serde_json::to_string_pretty(&file).expect("instance serializes")
    }

    /// Parses and validates an instance: simple polygon, centers inside,
    /// positive radii, pairwise intersecting disks.
    pub fn from_json(text: &str) -> Result<Instance> {
        let file: InstanceFile = serde_json::from_str(text)?;
        let polygon = SimplePolygon::validate(
            file.polygon
                .iter()
                .map(|&[x, y]| Point::new(x, y))
                .collect(),
        )?;
        let mut disks = Vec::with_capacity(file.disks.len());
        for (i, d) in file.disks.iter().enumerate() {
            let center = Point::new(d.center[0], d.center[1]);
            if polygon.locate(center) == PointLocation::Outside {
                return Err(HarnessError::InvalidInstance(format!(
                    "disk {i} center lies outside the polygon"
                )));
            }
            disks.push(GeodesicDisk::new(center, d.radius)?);
        }
        if disks.is_empty() {
            return Err(HarnessError::InvalidInstance("no disks".into()));
        }
        let tri = triangulate(&polygon, EarOrder::Forward)?;
        if !verify_pairwise(&polygon, &tri, &disks)? {
            return Err(HarnessError::InvalidInstance(
                "disks are not pairwise intersecting".into(),
            ));
        }
        Ok(Instance {
            polygon,
            disks,
            name: file.name,
            seed: file.seed,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Instance> {
        Instance::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Output file of the `pierce` subcommand.
#[derive(Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<[f64; 2]>,
    pub provenance: Vec<String>,
    pub case: String,
}

impl PointsFile {
    pub fn from_set(set: &PiercingSet<Real>) -> Self {
        PointsFile {
            points: set.points.iter().map(|p| [p.x, p.y]).collect(),
            provenance: set.provenance.iter().map(|p| p.to_string()).collect(),
            case: set.case.as_str().to_string(),
        }
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.points.iter().map(|&[x, y]| Point::new(x, y)).collect()
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<PointsFile> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}
