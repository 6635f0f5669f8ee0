//! 2-cell embeddings given by rotation systems with edge signatures, their
//! faces, Euler characteristic and exact edge curvature.

mod curvature;
mod faces;
mod rotation;
mod search;

pub use curvature::{
    curvature_report, curvature_sum, edge_curvature, format_rational, CurvatureReport, EdgeCharge,
    Rational,
};
pub use faces::{euler_characteristic, trace_faces, FaceSet};
pub use rotation::{Dart, RotationSystem};
pub use search::{
    euler_upper_bound, max_euler_characteristic, max_euler_characteristic_seeded, rotation_count,
};
