use crate::error::{Error, Result};
use crate::linalg::{Mat3, OrthogonalMatrix, Sign, Vec3};

/// Unit-norm tolerance on `a² + b² + c² + d²`.
pub const UNIT_TOL: f64 = 1e-12;

/// `a + b·i + c·j + d·k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion { a, b, c, d }
    }

    pub const fn identity() -> Quaternion {
        Quaternion::new(1.0, 0.0, 0.0, 0.0)
    }

    pub fn vector_part(&self) -> Vec3 {
        Vec3::new(self.b, self.c, self.d)
    }

    pub fn norm_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Scales to unit norm; `None` for the zero quaternion.
    pub fn normalized(&self) -> Option<Quaternion> {
        let n = self.norm_sq().sqrt();
        if n > 0.0 && n.is_finite() {
            Some(Quaternion::new(self.a / n, self.b / n, self.c / n, self.d / n))
        } else {
            None
        }
    }

    /// Representative of ±q with `a > 0`, or for `a = 0` with the first
    /// non-zero vector component positive.
    pub fn canonical(&self) -> Quaternion {
        let leading = [self.a, self.b, self.c, self.d].into_iter().find(|x| *x != 0.0).unwrap_or(0.0);
        if leading < 0.0 {
            Quaternion::new(-self.a, -self.b, -self.c, -self.d)
        } else {
            *self
        }
    }

    /// Quaternion of the rotation by `angle` about the unit `axis`.
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Quaternion {
        let (s, c) = (0.5 * angle).sin_cos();
        Quaternion::new(c, s * axis.x, s * axis.y, s * axis.z)
    }
}

/// The rotation `w ↦ q w q⁻¹` as a matrix.
pub fn quat_to_matrix(q: Quaternion) -> Result<OrthogonalMatrix> {
    let n = q.norm_sq();
    if !((n - 1.0).abs() <= UNIT_TOL) {
        return Err(Error::NotUnit { norm_sq: n });
    }
    let Quaternion { a, b, c, d } = q;
    let m = Mat3::new([
        [a * a + b * b - c * c - d * d, 2.0 * (b * c - a * d), 2.0 * (a * c + b * d)],
        [2.0 * (b * c + a * d), a * a + c * c - b * b - d * d, 2.0 * (c * d - a * b)],
        [2.0 * (b * d - a * c), 2.0 * (a * b + c * d), a * a + d * d - b * b - c * c],
    ]);
    Ok(OrthogonalMatrix::measure(m))
}

/// Inverse of [`quat_to_matrix`], canonicalized by [`Quaternion::canonical`].
///
/// Branches on the largest of `1 + tr, 1 + a11 − a22 − a33, …`, which
/// equal `4a², 4b², 4c², 4d²`.
pub fn matrix_to_quat(m: &OrthogonalMatrix) -> Result<Quaternion> {
    if m.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    let r = &m.matrix().rows;
    let candidates = [
        1.0 + r[0][0] + r[1][1] + r[2][2],
        1.0 + r[0][0] - r[1][1] - r[2][2],
        1.0 - r[0][0] + r[1][1] - r[2][2],
        1.0 - r[0][0] - r[1][1] + r[2][2],
    ];
    let branch = (1..4).fold(0, |best, k| if candidates[k] > candidates[best] { k } else { best });
    let s = candidates[branch].max(0.0).sqrt() * 2.0; // 4·|component|
    let q = match branch {
        0 => Quaternion::new(0.25 * s, (r[2][1] - r[1][2]) / s, (r[0][2] - r[2][0]) / s, (r[1][0] - r[0][1]) / s),
        1 => Quaternion::new((r[2][1] - r[1][2]) / s, 0.25 * s, (r[0][1] + r[1][0]) / s, (r[0][2] + r[2][0]) / s),
        2 => Quaternion::new((r[0][2] - r[2][0]) / s, (r[0][1] + r[1][0]) / s, 0.25 * s, (r[1][2] + r[2][1]) / s),
        _ => Quaternion::new((r[1][0] - r[0][1]) / s, (r[0][2] + r[2][0]) / s, (r[1][2] + r[2][1]) / s, 0.25 * s),
    };
    Ok(q.normalized().expect("branch component is at least 1/2").canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{validate_orthogonal, DEFAULT_ORTHO_TOL};
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn identity_quaternion() {
        assert_eq!(*quat_to_matrix(Quaternion::identity()).unwrap().matrix(), Mat3::identity());
        let id = validate_orthogonal(Mat3::identity(), DEFAULT_ORTHO_TOL).unwrap();
        assert_eq!(matrix_to_quat(&id).unwrap(), Quaternion::identity());
    }

    #[test]
    fn quarter_turn_about_z() {
        let q = Quaternion::new(FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2);
        let m = quat_to_matrix(q).unwrap();
        let rz90 = Mat3::new([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(m.max_abs_diff(&rz90) < 1e-15);
        let back = matrix_to_quat(&validate_orthogonal(rz90, DEFAULT_ORTHO_TOL).unwrap()).unwrap();
        assert!((back.a - FRAC_1_SQRT_2).abs() < 1e-15 && (back.d - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!((back.b, back.c), (0.0, 0.0));
    }

    #[test]
    fn half_turn_about_diagonal() {
        let m = Mat3::new([[-1.0, 2.0, 2.0], [2.0, -1.0, 2.0], [2.0, 2.0, -1.0]]) * (1.0 / 3.0);
        let q = matrix_to_quat(&validate_orthogonal(m, DEFAULT_ORTHO_TOL).unwrap()).unwrap();
        let s = 1.0 / 3.0_f64.sqrt();
        assert!(q.a.abs() < 1e-15);
        for x in [q.b, q.c, q.d] {
            assert!((x - s).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_unit_and_improper() {
        assert!(matches!(quat_to_matrix(Quaternion::new(1.0, 1.0, 0.0, 0.0)), Err(Error::NotUnit { .. })));
        assert!(matches!(quat_to_matrix(Quaternion::new(f64::NAN, 0.0, 0.0, 0.0)), Err(Error::NotUnit { .. })));
        let refl = validate_orthogonal(Mat3::diag(1.0, 1.0, -1.0), DEFAULT_ORTHO_TOL).unwrap();
        assert_eq!(matrix_to_quat(&refl), Err(Error::WrongDeterminant));
    }

    #[test]
    fn canonical_sign() {
        assert_eq!(Quaternion::new(-0.5, 0.5, -0.5, 0.5).canonical(), Quaternion::new(0.5, -0.5, 0.5, -0.5));
        assert_eq!(Quaternion::new(0.0, 0.0, -1.0, 0.0).canonical(), Quaternion::new(0.0, 0.0, 1.0, 0.0));
    }
}
