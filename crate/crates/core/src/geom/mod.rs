//! Points of projective space, configurations and linear projections.

mod point;
mod projection;

pub use point::{span_dimension, PointConfig, ProjPoint};
pub use projection::{sample_general_projection, LinearProjection};
