//! Piercing pairwise-intersecting geodesic disks in a simple polygon.
//!
//! Given a simple polygon and a family of pairwise-intersecting geodesic
//! disks inside it, this crate computes a set of at most five points that
//! pierces every disk. The pipeline:
//!
//! 1. [`kernel`] — planar primitives, polygon validation, ear-clipping
//!    triangulation, robust orientation.
//! 2. [`geodesic`] — shortest paths inside the polygon (funnel over the
//!    triangulation's dual tree), geodesic disks, geodesic cores.
//! 3. [`mindisk`] — the minimal disk meeting every input disk, its tangent
//!    disks, tangency points and tangent lines.
//! 4. [`frame`] — normalization into the canonical coordinate frame
//!    (minimal disk at the origin with unit radius, first tangent line
//!    horizontal) plus all landmark points.
//! 5. [`sweep`] — guard points on the auxiliary unit circles, defined by
//!    tangent-line and horizontal-line sweeps.
//! 6. [`piercing`] — case dispatch and the two selection algorithms that
//!    emit the piercing set.
//!
//! All geometry is generic over the scalar type via [`scalar::Scalar`];
//! the aliases below fix `f64`, which is what the CLI and the test suites
//! use.

pub mod error;
pub mod frame;
pub mod geodesic;
pub mod kernel;
pub mod mindisk;
pub mod piercing;
pub mod scalar;
pub mod sweep;
pub mod tol;

pub use error::Error;
pub use scalar::Scalar;

/// Default scalar for the concrete aliases.
pub type Real = f64;

pub type Point = kernel::Point2<Real>;
pub type Segment = kernel::Segment2<Real>;
pub type Line = kernel::Line2<Real>;
pub type Polygon = kernel::SimplePolygon<Real>;
pub type Triangulation = kernel::Triangulation;
pub type Path = geodesic::GeodesicPath<Real>;
pub type Disk = geodesic::GeodesicDisk<Real>;
pub type Core = geodesic::GeodesicCore<Real>;
pub type MinDisk = mindisk::MinDiskResult<Real>;
pub type FrameF64 = frame::Frame<Real>;
pub type LandmarksF64 = frame::Landmarks<Real>;
pub type GuardPointsF64 = sweep::GuardPoints<Real>;
pub type PiercingSetF64 = piercing::PiercingSet<Real>;
