//! Spectral projection onto the fixed line of a rotation, from the adjugate
//! of `I − A` and from a trapezoid discretization of the resolvent contour
//! integral around the eigenvalue 1.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::axis::{is_plus_minus_identity, rotation_angle};
use crate::complex::{CMat3, ComplexScalar};
use crate::error::{Error, Result};
use crate::linalg::{Mat3, OrthogonalMatrix, Sign};

/// Default number of quadrature nodes.
pub const DEFAULT_NODES: usize = 256;
/// Smallest accepted number of quadrature nodes.
pub const MIN_NODES: usize = 16;
/// Below this separation `|1 − λ|` no contour is attempted.
pub const MIN_SEPARATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionMethod {
    Adjugate,
    Contour,
}

impl ProjectionMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ProjectionMethod::Adjugate => "ADJUGATE",
            ProjectionMethod::Contour => "CONTOUR",
        }
    }
}

impl fmt::Display for ProjectionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionReport {
    pub p: Mat3,
    /// The eigenvalue `e^{iθ}` with `θ ∈ (0, π]`.
    pub lambda: ComplexScalar,
    pub method: ProjectionMethod,
    /// Largest discarded imaginary part (zero for the adjugate form).
    pub imag_max: f64,
}

/// Contour radius around `z = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Radius {
    /// `min(0.5·|1 − λ|, 0.5)`.
    #[default]
    Auto,
    Fixed(f64),
}

fn require_rotation(a: &OrthogonalMatrix) -> Result<()> {
    if a.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    if is_plus_minus_identity(a) {
        return Err(Error::IdentityInput);
    }
    Ok(())
}

/// The non-real (or −1) eigenvalue `λ = cos θ + i sin θ` of a rotation.
pub fn complex_eigenvalue(a: &OrthogonalMatrix) -> Result<ComplexScalar> {
    require_rotation(a)?;
    Ok(Complex64::from_polar(1.0, rotation_angle(a.matrix())))
}

/// `P = adj(I − A) / (3 − tr A)`.
pub fn projection_adjugate(a: &OrthogonalMatrix) -> Result<ProjectionReport> {
    let lambda = complex_eigenvalue(a)?;
    let m = *a.matrix();
    let denom = 3.0 - m.trace();
    let p = (Mat3::identity() - m).adjugate() * (1.0 / denom);
    Ok(ProjectionReport { p, lambda, method: ProjectionMethod::Adjugate, imag_max: 0.0 })
}

/// `|1 − λ| = sqrt(3 − tr A)`.
pub fn separation(a: &Mat3) -> f64 {
    (3.0 - a.trace()).max(0.0).sqrt()
}

/// `P = (1/2πi) ∮ (zI − A)⁻¹ dz` over the circle `|z − 1| = ρ`, by the
/// trapezoid rule with `n_points` equally spaced nodes.
pub fn projection_contour(a: &OrthogonalMatrix, n_points: usize, radius: Radius) -> Result<ProjectionReport> {
    if n_points < MIN_NODES {
        return Err(Error::InvalidArgument(format!("n_points = {n_points}, at least {MIN_NODES} required")));
    }
    let lambda = complex_eigenvalue(a)?;
    let m = *a.matrix();
    let sep = separation(&m);
    if sep < MIN_SEPARATION {
        return Err(Error::EigenvalueTooClose { separation: sep });
    }
    let rho = match radius {
        Radius::Auto => (0.5 * sep).min(0.5),
        Radius::Fixed(r) => {
            if !(r > 0.0 && r < sep) {
                return Err(Error::InvalidArgument(format!("radius {r} must lie in (0, {sep})")));
            }
            r
        }
    };

    let am = CMat3::from_real(&m);
    let one = Complex64::new(1.0, 0.0);
    let mut acc = CMat3::default();
    for k in 0..n_points {
        let w = Complex64::from_polar(1.0, TAU * k as f64 / n_points as f64);
        let z = one + w * rho;
        let shifted = CMat3::identity().scale(z) - am;
        let weight = w / shifted.det();
        acc = acc + shifted.adjugate().scale(weight);
    }
    let total = acc.scale(Complex64::new(rho / n_points as f64, 0.0));
    Ok(ProjectionReport {
        p: total.re(),
        lambda,
        method: ProjectionMethod::Contour,
        imag_max: total.max_abs_im(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{validate_orthogonal, Idx, Vec3, DEFAULT_ORTHO_TOL};
    use crate::repr::{exp_so3, AxisAngle};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ortho(m: Mat3) -> OrthogonalMatrix {
        validate_orthogonal(m, DEFAULT_ORTHO_TOL).unwrap()
    }

    fn rot(axis: Vec3, angle: f64) -> OrthogonalMatrix {
        exp_so3(AxisAngle::new(axis, angle).unwrap())
    }

    #[test]
    fn rz90_projection() {
        let a = rot(Vec3::new(0.0, 0.0, 1.0), FRAC_PI_2);
        let adj = projection_adjugate(&a).unwrap();
        assert!(adj.p.max_abs_diff(&Mat3::diag(0.0, 0.0, 1.0)) < 1e-15);
        assert!((adj.lambda - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let c = projection_contour(&a, 256, Radius::Auto).unwrap();
        assert!(c.p.max_abs_diff(&Mat3::diag(0.0, 0.0, 1.0)) < 1e-10);
        assert!(c.imag_max < 1e-12);
        assert_eq!(c.method, ProjectionMethod::Contour);
    }

    #[test]
    fn half_turn_about_diagonal() {
        let m = Mat3::new([[-1.0, 2.0, 2.0], [2.0, -1.0, 2.0], [2.0, 2.0, -1.0]]) * (1.0 / 3.0);
        let r = projection_adjugate(&ortho(m)).unwrap();
        assert!(r.p.max_abs_diff(&Mat3::from_fn(|_, _| 1.0 / 3.0)) < 1e-15);
        assert!((r.lambda + 1.0).norm() < 1e-15);
    }

    #[test]
    fn identity_and_near_identity() {
        let id = ortho(Mat3::identity());
        assert_eq!(projection_adjugate(&id), Err(Error::IdentityInput));
        assert_eq!(projection_contour(&id, 64, Radius::Auto), Err(Error::IdentityInput));
        let near = rot(Vec3::new(0.3, -0.2, 0.9), 1e-7);
        assert!(matches!(projection_contour(&near, 256, Radius::Auto), Err(Error::EigenvalueTooClose { .. })));
        let improper = ortho(Mat3::diag(1.0, 1.0, -1.0));
        assert_eq!(complex_eigenvalue(&improper), Err(Error::WrongDeterminant));
    }

    #[test]
    fn argument_checks() {
        let a = rot(Vec3::new(1.0, 2.0, 3.0), 1.0);
        assert!(matches!(projection_contour(&a, 8, Radius::Auto), Err(Error::InvalidArgument(_))));
        assert!(matches!(projection_contour(&a, 64, Radius::Fixed(5.0)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn projection_properties() {
        let axis = Vec3::new(0.2, -0.7, 0.4);
        let a = rot(axis, 2.1);
        let u = axis.normalized().unwrap();
        let r = projection_adjugate(&a).unwrap();
        assert!(r.p.max_abs_diff(&Mat3::outer(&u, &u)) < 1e-14);
        assert!((r.p * r.p).max_abs_diff(&r.p) < 1e-14);
        assert!((*a.matrix() * r.p).max_abs_diff(&r.p) < 1e-14);
        assert!((r.p.trace() - 1.0).abs() < 1e-14);
        for j in Idx::ALL {
            let w = crate::axis::vector_w(a.matrix(), j);
            assert!(r.p.col(j).line_angle(&w) < 1e-12);
        }
    }

    #[test]
    fn contour_converges_geometrically() {
        let a = rot(Vec3::new(-0.5, 0.1, 0.8), 1.3);
        let exact = projection_adjugate(&a).unwrap().p;
        let rho = 0.9 * separation(a.matrix());
        let err = |n| projection_contour(&a, n, Radius::Fixed(rho)).unwrap().p.max_abs_diff(&exact);
        let (e64, e128) = (err(64), err(128));
        assert!(e64 > 1e-6 && e128 * 10.0 < e64, "{e64:e} {e128:e}");
        assert!(err(256) < 1e-10);
    }

    #[test]
    fn half_turn_contour() {
        let a = rot(Vec3::new(1.0, -1.0, 0.5), PI);
        let exact = projection_adjugate(&a).unwrap().p;
        let c = projection_contour(&a, DEFAULT_NODES, Radius::Auto).unwrap();
        assert!(c.p.max_abs_diff(&exact) < 1e-12);
    }
}
