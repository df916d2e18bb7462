use crate::axis::{extract_axis, is_plus_minus_identity, Method};
use crate::error::{Error, Result};
use crate::kernel::{skew_matrix, SkewParams};
use crate::linalg::{Mat3, OrthogonalMatrix, Sign, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    axis: Vec3,
    /// Radians, right-hand rule about `axis`.
    pub angle: f64,
}

impl AxisAngle {
    /// Normalizes `axis`; fails on a zero or non-finite axis.
    pub fn new(axis: Vec3, angle: f64) -> Result<AxisAngle> {
        let axis = axis
            .normalized()
            .ok_or_else(|| Error::InvalidArgument("rotation axis must be a non-zero finite vector".into()))?;
        if !angle.is_finite() {
            return Err(Error::InvalidArgument(format!("angle must be finite, got {angle}")));
        }
        Ok(AxisAngle { axis, angle })
    }

    pub fn axis(&self) -> Vec3 {
        self.axis
    }
}

/// `I + sin t·K + (1 − cos t)·K²` with `K` the skew matrix of the unit axis.
pub fn exp_so3(aa: AxisAngle) -> OrthogonalMatrix {
    let k = skew_matrix(SkewParams::from_vec(aa.axis));
    let (s, c) = aa.angle.sin_cos();
    OrthogonalMatrix::measure(Mat3::identity() + k * s + (k * k) * (1.0 - c))
}

/// Axis-angle with angle in [0, π]; the identity maps to angle 0 about e1.
pub fn log_so3(a: &OrthogonalMatrix) -> Result<AxisAngle> {
    if a.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    if is_plus_minus_identity(a) {
        return Ok(AxisAngle { axis: Vec3::new(1.0, 0.0, 0.0), angle: 0.0 });
    }
    let report = extract_axis(a, Method::Auto)?;
    Ok(AxisAngle { axis: report.axis, angle: report.angle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Idx;
    use crate::repr::{quat_to_matrix, Quaternion};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zero_angle_is_identity() {
        let aa = AxisAngle::new(Vec3::new(1.0, 2.0, 3.0), 0.0).unwrap();
        assert_eq!(*exp_so3(aa).matrix(), Mat3::identity());
    }

    #[test]
    fn quarter_turn_about_z() {
        let m = exp_so3(AxisAngle::new(Vec3::unit(Idx::I3), FRAC_PI_2).unwrap());
        let rz90 = Mat3::new([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(m.max_abs_diff(&rz90) < 1e-15);
    }

    #[test]
    fn agrees_with_quaternion_route() {
        let aa = AxisAngle::new(Vec3::new(1.0, 2.0, 3.0), 1.0).unwrap();
        let via_quat = quat_to_matrix(Quaternion::from_axis_angle(aa.axis(), aa.angle)).unwrap();
        assert!(exp_so3(aa).max_abs_diff(&via_quat) < 1e-12);
    }

    #[test]
    fn log_of_identity_and_reflection() {
        let id = OrthogonalMatrix::measure(Mat3::identity());
        assert_eq!(log_so3(&id).unwrap().angle, 0.0);
        let refl = OrthogonalMatrix::measure(Mat3::diag(1.0, -1.0, 1.0));
        assert_eq!(log_so3(&refl), Err(Error::WrongDeterminant));
        assert!(AxisAngle::new(Vec3::zero(), 1.0).is_err());
    }
}
