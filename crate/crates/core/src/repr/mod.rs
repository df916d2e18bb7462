//! Rotation parameterizations: unit quaternions, axis-angle (exponential
//! map), Cayley parameters, and products of two reflections, plus a seeded
//! Haar sampler.

mod cayley;
mod exp;
mod quaternion;
mod random;
mod reflection;

pub use cayley::{cayley_compose, cayley_decompose, EPS_CAYLEY};
pub use exp::{exp_so3, log_so3, AxisAngle};
pub use quaternion::{matrix_to_quat, quat_to_matrix, Quaternion};
pub use random::{random_rotation, RotationSampler};
pub use reflection::{
    compose_reflections, reflection_factors, reflection_product, reflection_sum_identity_residual,
    reflection_sum_identity_residual_of, ReflectionPair,
};
