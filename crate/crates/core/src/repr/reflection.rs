use super::exp::{exp_so3, log_so3, AxisAngle};
use crate::error::{Error, Result};
use crate::linalg::{Idx, Mat3, OrthogonalMatrix, Vec3};

/// Two unit normals `x`, `y`; the rotation is `(I − 2xxᵀ)(I − 2yyᵀ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionPair {
    x: Vec3,
    y: Vec3,
    c: f64,
}

impl ReflectionPair {
    /// Requires both vectors to be unit within 1e−12.
    pub fn new(x: Vec3, y: Vec3) -> Result<ReflectionPair> {
        for v in [x, y] {
            let n = v.dot(&v);
            if !((n - 1.0).abs() <= 1e-12) {
                return Err(Error::InvalidArgument(format!("reflection normal has squared norm {n}, expected 1")));
            }
        }
        Ok(ReflectionPair { x, y, c: x.dot(&y) })
    }

    /// Normalizes both directions first.
    pub fn from_directions(x: Vec3, y: Vec3) -> Result<ReflectionPair> {
        let zero = || Error::InvalidArgument("reflection normal must be non-zero".into());
        ReflectionPair::new(x.normalized().ok_or_else(zero)?, y.normalized().ok_or_else(zero)?)
    }

    pub fn x(&self) -> Vec3 {
        self.x
    }

    pub fn y(&self) -> Vec3 {
        self.y
    }

    /// ⟨x, y⟩.
    pub fn c(&self) -> f64 {
        self.c
    }
}

fn householder(n: &Vec3) -> Mat3 {
    Mat3::identity() - Mat3::outer(n, n) * 2.0
}

/// `(I − 2xxᵀ)(I − 2yyᵀ)`, defined for any pair including parallel ones.
pub fn reflection_product(pair: &ReflectionPair) -> Mat3 {
    householder(&pair.x) * householder(&pair.y)
}

/// The product rotation and its axis `x × y` (not normalized).
pub fn compose_reflections(pair: &ReflectionPair) -> Result<(OrthogonalMatrix, Vec3)> {
    let z = pair.x.cross(&pair.y);
    if z.norm() <= 1e-12 {
        return Err(Error::ParallelReflections);
    }
    Ok((OrthogonalMatrix::measure(reflection_product(pair)), z))
}

/// Unit normals `x ⊥ u`, `y = R(−u, t/2)·x` whose product is the rotation
/// by `t` about `u`. The identity factors as `x = y`.
pub fn reflection_factors(a: &OrthogonalMatrix) -> Result<ReflectionPair> {
    let aa = log_so3(a)?;
    let u = aa.axis();
    let k = Idx::ALL.into_iter().fold(Idx::I1, |best, i| if u[i].abs() < u[best].abs() { i } else { best });
    let x = u.cross(&Vec3::unit(k)).normalized().expect("u is not parallel to its smallest coordinate axis");
    let half = exp_so3(AxisAngle::new(-u, 0.5 * aa.angle)?);
    ReflectionPair::from_directions(x, *half.matrix() * x)
}

/// `max_{i≠j} |(a_ij + a_ji) − (−4x_i x_j − 4y_i y_j + 4c(x_i y_j + x_j y_i))|`
/// with `A` formed by explicit multiplication.
pub fn reflection_sum_identity_residual(pair: &ReflectionPair) -> f64 {
    reflection_sum_identity_residual_of(&reflection_product(pair), pair)
}

/// As [`reflection_sum_identity_residual`], against a given matrix `a`.
pub fn reflection_sum_identity_residual_of(a: &Mat3, pair: &ReflectionPair) -> f64 {
    let (x, y, c) = (pair.x.to_array(), pair.y.to_array(), pair.c);
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            let lhs = a[(i, j)] + a[(j, i)];
            let rhs = -4.0 * x[i] * x[j] - 4.0 * y[i] * y[j] + 4.0 * c * (x[i] * y[j] + x[j] * y[i]);
            worst = worst.max((lhs - rhs).abs());
        }
    }
    worst
}
