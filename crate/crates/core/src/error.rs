//! Error types for the whole pipeline.

use thiserror::Error;

/// Everything that can go wrong while validating geometry or running the
/// piercing pipeline. Payload coordinates are reported as `f64` regardless
/// of the scalar the computation ran with.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),

    #[error("degenerate vertex {0}: repeated point or zero-area spike")]
    DegenerateVertex(usize),

    #[error("polygon has fewer than 3 vertices")]
    TooFewVertices,

    #[error("coordinate is not finite")]
    NonFiniteCoordinate,

    #[error("triangulation failed: no clippable ear remains ({0} vertices left)")]
    NoEarFound(usize),

    #[error("segment endpoint lies outside the polygon")]
    EndpointOutside,

    #[error("query point lies outside the polygon")]
    PointOutsidePolygon,

    #[error("points are geodesically collinear")]
    GeodesicallyCollinear,

    #[error("disks are not pairwise intersecting: disks {0} and {1} are disjoint")]
    NotPairwiseIntersecting(usize, usize),

    #[error("minimal-disk search stalled: best depth {best_depth} at ({x}, {y}): {reason}")]
    OptimizerStalled {
        x: f64,
        y: f64,
        best_depth: f64,
        reason: &'static str,
    },

    #[error("tangency point not found on the path toward disk {0}")]
    TangencyNotFound(usize),

    #[error("tangent lines {0} and {1} are parallel: frame is degenerate")]
    DegenerateTangentTriangle(usize, usize),

    #[error("both tangent-line angles exceed pi/3; upstream minimal disk is wrong")]
    BothLarge,

    #[error("piercing point ({x}, {y}) tagged {tag} fell outside the polygon")]
    PiercingPointOutside { x: f64, y: f64, tag: String },

    #[error("disk radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("need at least one disk")]
    NoDisks,
}

pub type Result<T> = std::result::Result<T, Error>;
