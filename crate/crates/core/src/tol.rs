//! Numeric tolerances shared across the pipeline.
//!
//! All values are in frame units (the normalized frame has unit minimal-disk
//! radius, so every landmark magnitude is O(1)); operations on raw input
//! coordinates scale them by a characteristic length where noted.

/// Boundary / incidence classification tolerance.
pub const EPS_GEOM: f64 = 1e-9;

/// Unit-vector and involution tolerance.
pub const EPS_UNIT: f64 = 1e-12;

/// Threshold under which the naive orientation determinant is re-evaluated
/// exactly.
pub const EPS_ORIENT: f64 = 1e-12;

/// Tangency classification tolerance, relative to the minimal-disk radius.
pub const TAU_TAN: f64 = 1e-6;

/// Piercing verification tolerance.
pub const TAU_PIERCE: f64 = 1e-7;

/// Angular resolution of the tangent-line sweeps.
pub const SWEEP_ANGLE_RES: f64 = 1e-9;

/// Samples along a sweep line's chord when testing disk contact.
pub const SWEEP_CHORD_SAMPLES: usize = 256;
