//! Planar primitives and simple-polygon machinery.

mod point;
mod polygon;
mod predicates;
mod triangulate;

pub use point::{Line2, Point2, Segment2};
pub use polygon::{PointLocation, SimplePolygon};
pub use predicates::{orient, orient_sign, segments_cross_properly, segments_touch};
pub use triangulate::{triangulate, EarOrder, Triangulation};
