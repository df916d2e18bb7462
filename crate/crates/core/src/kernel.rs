//! Kernel vectors from skew-symmetric structure and from cofactor rows.

use crate::axis::vector_u;
use crate::error::{Error, Result};
use crate::linalg::{Idx, Mat3, OrthogonalMatrix, Sign, Vec3};

/// Cofactor rows with infinity norm at or below this are treated as zero.
pub const RANK_DEFICIENT_TOL: f64 = 1e-12;

/// Parameters of the skew-symmetric matrix
/// `[[0, −r, q], [r, 0, −p], [−q, p, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SkewParams {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl SkewParams {
    pub const fn new(p: f64, q: f64, r: f64) -> SkewParams {
        SkewParams { p, q, r }
    }

    pub fn from_vec(v: Vec3) -> SkewParams {
        SkewParams::new(v.x, v.y, v.z)
    }

    pub fn as_vec(&self) -> Vec3 {
        Vec3::new(self.p, self.q, self.r)
    }

    /// p² + q² + r².
    pub fn norm_sq(&self) -> f64 {
        self.p * self.p + self.q * self.q + self.r * self.r
    }
}

pub fn skew_matrix(s: SkewParams) -> Mat3 {
    let SkewParams { p, q, r } = s;
    Mat3::new([[0.0, -r, q], [r, 0.0, -p], [-q, p, 0.0]])
}

/// The three rows of the cofactor matrix of `m`. When `m` has rank 2 each
/// row lies in `ker m` and at least one is non-zero.
pub fn rank2_kernel_rows(m: &Mat3) -> [Vec3; 3] {
    let c = m.cofactor_matrix();
    Idx::ALL.map(|i| c.row(i))
}

/// Index and value of the row with the largest infinity norm (lowest index on ties).
fn dominant_row(rows: &[Vec3; 3]) -> (Idx, Vec3) {
    let mut best = (Idx::I1, rows[0]);
    for i in [Idx::I2, Idx::I3] {
        if rows[i.zero_based()].norm_inf() > best.1.norm_inf() {
            best = (i, rows[i.zero_based()]);
        }
    }
    best
}

/// Unit eigenvector for `lambda` taken from the dominant cofactor row of
/// `A − λI`.
pub fn eigvec_via_cofactors(a: &OrthogonalMatrix, lambda: Sign) -> Result<Vec3> {
    let shifted = *a.matrix() - Mat3::identity() * lambda.value();
    let det = shifted.det();
    if det.abs() > 1e-8 {
        return Err(Error::NotAnEigenvalue(format!("{} (det(A - lambda I) = {det:e})", lambda.as_i8())));
    }
    let rows = rank2_kernel_rows(&shifted);
    let (_, row) = dominant_row(&rows);
    if row.norm_inf() <= RANK_DEFICIENT_TOL {
        return Err(Error::RankDeficient);
    }
    Ok(row.normalized().expect("non-zero row"))
}

/// `u = U(A)` together with `‖A²u − u‖∞`. Since `u ∈ ker(A − Aᵀ)`, the
/// residual vanishes for every orthogonal `A`.
pub fn symmetric_kernel_check(a: &OrthogonalMatrix) -> (Vec3, f64) {
    let u = vector_u(a);
    let m = *a.matrix();
    let residual = ((m * m) * u - u).norm_inf();
    (u, residual)
}
