//! Axis extraction checked against an SVD null-space solve of `A − I`.

use nalgebra::Matrix3;
use rotaxis::repr::{exp_so3, AxisAngle, RotationSampler};
use rotaxis::{extract_axis, vector_v, Error, Idx, Mat3, Method, Vec3};
use std::f64::consts::PI;

fn oracle_axis(m: &Mat3) -> Vec3 {
    let shifted = Matrix3::from_fn(|i, j| m.rows[i][j] - if i == j { 1.0 } else { 0.0 });
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.unwrap();
    let k = svd.singular_values.imin();
    Vec3::new(v_t[(k, 0)], v_t[(k, 1)], v_t[(k, 2)])
}

fn sweep_axes() -> Vec<Vec3> {
    let mut axes: Vec<Vec3> = Idx::ALL.map(Vec3::unit).to_vec();
    let mut s = RotationSampler::new(2024);
    axes.extend((0..100).map(|_| s.next_unit_vector()));
    axes
}

#[test]
fn degenerate_angles_match_oracle() {
    for axis in sweep_axes() {
        for angle in [1e-6, PI - 1e-6, PI] {
            let a = exp_so3(AxisAngle::new(axis, angle).unwrap());
            let r = extract_axis(&a, Method::Auto).unwrap();
            let oracle = oracle_axis(a.matrix());
            assert!(r.axis.line_angle(&oracle) < 1e-8, "axis {axis:?} angle {angle}: {:?} vs {oracle:?}", r.axis);
            assert!(r.axis.line_angle(&axis) < 1e-8);
            if angle < PI {
                assert!(r.axis.dot(&axis) > 0.0, "orientation flipped at angle {angle}");
            }
        }
    }
}

#[test]
fn coordinate_rotations_have_degenerate_v() {
    for i in Idx::ALL {
        for angle in [1e-6, 0.3, 1.0, PI / 2.0, 2.5, PI - 1e-6, PI] {
            let a = exp_so3(AxisAngle::new(Vec3::unit(i), angle).unwrap());
            assert!(matches!(vector_v(a.matrix()), Err(Error::DegenerateDenominator(_))), "e{i} angle {angle}");
        }
    }
}

#[test]
fn haar_samples_match_oracle() {
    let mut s = RotationSampler::new(77);
    for _ in 0..2000 {
        let a = s.next_rotation();
        let r = extract_axis(&a, Method::Auto).unwrap();
        assert!(r.axis.line_angle(&oracle_axis(a.matrix())) < 1e-9);
    }
}
