//! Seeded Haar sampling on SO(3).
//!
//! The generator is ChaCha8 (`rand_chacha`), seeded through
//! `SeedableRng::seed_from_u64`; normals come from `rand_distr::StandardNormal`.
//! Four independent normals normalized to a unit quaternion are uniform on
//! S³, which pushes forward to the Haar measure on SO(3).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::quaternion::{quat_to_matrix, Quaternion};
use crate::linalg::{OrthogonalMatrix, Vec3};

/// A deterministic stream of random rotations and directions.
#[derive(Debug, Clone)]
pub struct RotationSampler {
    rng: ChaCha8Rng,
}

impl RotationSampler {
    pub fn new(seed: u64) -> RotationSampler {
        RotationSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A standard normal deviate.
    pub fn next_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn next_quaternion(&mut self) -> Quaternion {
        loop {
            let q = Quaternion::new(self.next_normal(), self.next_normal(), self.next_normal(), self.next_normal());
            if let Some(unit) = q.normalized() {
                return unit;
            }
        }
    }

    pub fn next_rotation(&mut self) -> OrthogonalMatrix {
        quat_to_matrix(self.next_quaternion()).expect("normalized quaternion is unit")
    }

    /// Uniform direction on the unit sphere.
    pub fn next_unit_vector(&mut self) -> Vec3 {
        loop {
            if let Some(v) = Vec3::new(self.next_normal(), self.next_normal(), self.next_normal()).normalized() {
                return v;
            }
        }
    }

    /// Uniform in [lo, hi).
    pub fn next_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Uniform in [0, n).
    pub fn next_index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// A fair coin flip.
    pub fn next_bool(&mut self) -> bool {
        self.rng.random()
    }
}

impl Iterator for RotationSampler {
    type Item = OrthogonalMatrix;
    fn next(&mut self) -> Option<OrthogonalMatrix> {
        Some(self.next_rotation())
    }
}

/// The first rotation of the stream seeded with `seed`.
pub fn random_rotation(seed: u64) -> OrthogonalMatrix {
    RotationSampler::new(seed).next_rotation()
}
