//! Eigenvectors of special unitary 3×3 matrices from cofactor rows of
//! `A − λI`.

use num_complex::Complex64;

use crate::complex::{CMat3, CVec3, ComplexScalar};
use crate::error::{Error, Result};
use crate::linalg::{Idx, OrthogonalMatrix};
use crate::repr::RotationSampler;

/// Default unitarity and determinant tolerance.
pub const DEFAULT_UNITARY_TOL: f64 = 1e-9;
/// How far `λ` may sit from a computed root.
pub const EIGENVALUE_TOL: f64 = 1e-8;
/// Cofactor rows with all entries at or below this modulus count as zero.
pub const ZERO_ROW_TOL: f64 = 1e-12;

/// A matrix that passed the `SU(3)` checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryMatrix {
    m: CMat3,
    unitarity_residual: f64,
    det: ComplexScalar,
}

impl UnitaryMatrix {
    /// Accepts `m` iff `max |m*m − I| ≤ tol` and `|det m − 1| ≤ tol`.
    pub fn new(m: CMat3, tol: f64) -> Result<UnitaryMatrix> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        if !m.rows.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NotSpecialUnitary { residual: f64::INFINITY });
        }
        let unitarity_residual = (m.conj_transpose() * m - CMat3::identity()).max_abs();
        let det = m.det();
        let residual = unitarity_residual.max((det - 1.0).norm());
        if residual > tol {
            return Err(Error::NotSpecialUnitary { residual });
        }
        Ok(UnitaryMatrix { m, unitarity_residual, det })
    }

    /// A real rotation viewed as a complex matrix.
    pub fn from_rotation(a: &OrthogonalMatrix) -> Result<UnitaryMatrix> {
        UnitaryMatrix::new(CMat3::from_real(a.matrix()), DEFAULT_UNITARY_TOL)
    }

    pub fn matrix(&self) -> &CMat3 {
        &self.m
    }

    pub fn unitarity_residual(&self) -> f64 {
        self.unitarity_residual
    }

    pub fn det(&self) -> ComplexScalar {
        self.det
    }
}

/// Coefficients `(c2, c1, c0)` of `det(zI − A) = z³ + c2 z² + c1 z + c0`.
fn char_poly(m: &CMat3) -> (Complex64, Complex64, Complex64) {
    (-m.trace(), m.cofactor_matrix().trace(), -m.det())
}

/// `det(zI − A)` evaluated at `z`.
pub fn char_poly_value(a: &UnitaryMatrix, z: ComplexScalar) -> ComplexScalar {
    let (c2, c1, c0) = char_poly(&a.m);
    ((z + c2) * z + c1) * z + c0
}

/// The three eigenvalues, sorted by argument in (−π, π].
pub fn su3_eigenvalues(a: &UnitaryMatrix) -> [ComplexScalar; 3] {
    let (c2, c1, c0) = char_poly(&a.m);
    // Depressed cubic y³ + p y + q with z = y − c2/3.
    let shift = -c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = c2 * c2 * c2 * (2.0 / 27.0) - c2 * c1 / 3.0 + c0;
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let (w1, w2) = (-q / 2.0 + disc, -q / 2.0 - disc);
    let w = if w1.norm() >= w2.norm() { w1 } else { w2 };
    let omega = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let mut roots = [Complex64::new(0.0, 0.0); 3];
    if w.norm() == 0.0 {
        roots = [shift; 3];
    } else {
        let u0 = w.powf(1.0 / 3.0);
        let mut u = u0;
        for r in roots.iter_mut() {
            *r = u - p / (3.0 * u) + shift;
            u *= omega;
        }
    }
    for r in roots.iter_mut() {
        let f = ((*r + c2) * *r + c1) * *r + c0;
        let df = (3.0 * *r + 2.0 * c2) * *r + c1;
        if df.norm() > 0.0 {
            *r -= f / df;
        }
    }
    roots.sort_by(|x, y| x.arg().total_cmp(&y.arg()));
    roots
}

fn check_eigenvalue(a: &UnitaryMatrix, lambda: ComplexScalar) -> Result<()> {
    let gap = su3_eigenvalues(a).iter().map(|r| (r - lambda).norm()).fold(f64::INFINITY, f64::min);
    if gap > EIGENVALUE_TOL {
        return Err(Error::NotAnEigenvalue(format!("{lambda} (distance to nearest root {gap:e})")));
    }
    Ok(())
}

/// Row `i` of the cofactor matrix of `A − λI` for `A ∈ SU(3)`: diagonal
/// `conj(a_ii) + λ² − λ(a_jj + a_kk)`, off-diagonal `conj(a_ij) + λ a_ji`.
pub fn su3_w(a: &UnitaryMatrix, lambda: ComplexScalar, i: Idx) -> Result<CVec3> {
    check_eigenvalue(a, lambda)?;
    let w = su3_w_unchecked(&a.m, lambda, i);
    if w.norm_inf() <= ZERO_ROW_TOL {
        return Err(Error::ZeroVector(i.one_based()));
    }
    Ok(w)
}

fn su3_w_unchecked(m: &CMat3, lambda: ComplexScalar, i: Idx) -> CVec3 {
    let (j, k) = i.cyclic_rest();
    let e = |r: Idx, c: Idx| m.entry(r, c);
    let mut w = CVec3::zero();
    w[i] = lambda * lambda + e(i, i).conj() - lambda * e(j, j) - lambda * e(k, k);
    w[j] = e(i, j).conj() + lambda * e(j, i);
    w[k] = e(i, k).conj() + lambda * e(k, i);
    w
}

/// Unit eigenvector for `λ` from the largest of the three `su3_w` rows,
/// phased so its largest entry is real and positive.
pub fn su3_eigenvector(a: &UnitaryMatrix, lambda: ComplexScalar) -> Result<(CVec3, Idx)> {
    check_eigenvalue(a, lambda)?;
    let (best, w) = Idx::ALL
        .into_iter()
        .map(|i| (i, su3_w_unchecked(&a.m, lambda, i)))
        .fold(None::<(Idx, CVec3)>, |acc, (i, w)| match acc {
            Some((_, b)) if b.norm_inf() >= w.norm_inf() => acc,
            _ => Some((i, w)),
        })
        .expect("three rows");
    if w.norm_inf() <= ZERO_ROW_TOL {
        return Err(Error::ZeroVector(best.one_based()));
    }
    Ok((w.normalized_phase().expect("non-zero row"), best))
}

/// The three vectors exactly as printed: `W₁ = (conj a₁₁ + λ² − λ(a₂₂+a₃₃),
/// conj a₁₂ + a₂₁, conj a₁₃ + a₃₁)`, `W₂ = (a₁₂+a₂₁, conj a₂₂ + λ² −
/// λ(a₁₁−a₃₃), a₂₃+a₃₂)`, `W₃ = (a₁₃+a₃₁, a₂₃+a₃₂, conj a₃₃ + λ² − λ(a₁₁−a₂₂))`.
pub fn su3_printed_w(a: &UnitaryMatrix, lambda: ComplexScalar) -> [CVec3; 3] {
    let e = |r: usize, c: usize| a.m.rows[r - 1][c - 1];
    let l2 = lambda * lambda;
    [
        CVec3([e(1, 1).conj() + l2 - lambda * (e(2, 2) + e(3, 3)), e(1, 2).conj() + e(2, 1), e(1, 3).conj() + e(3, 1)]),
        CVec3([e(1, 2) + e(2, 1), e(2, 2).conj() + l2 - lambda * (e(1, 1) - e(3, 3)), e(2, 3) + e(3, 2)]),
        CVec3([e(1, 3) + e(3, 1), e(2, 3) + e(3, 2), e(3, 3).conj() + l2 - lambda * (e(1, 1) - e(2, 2))]),
    ]
}

/// Relative residuals `‖A·W − λW‖∞ / ‖W‖∞` of the printed vectors (zero
/// for a vanishing vector).
pub fn su3_paper_form_residuals(a: &UnitaryMatrix, lambda: ComplexScalar) -> [f64; 3] {
    su3_printed_w(a, lambda).map(|w| {
        let n = w.norm_inf();
        if n == 0.0 {
            0.0
        } else {
            (a.m * w - w.scale(lambda)).norm_inf() / n
        }
    })
}

/// The largest of [`su3_paper_form_residuals`].
pub fn su3_paper_form_discrepancy(a: &UnitaryMatrix, lambda: ComplexScalar) -> f64 {
    su3_paper_form_residuals(a, lambda).into_iter().fold(0.0, f64::max)
}

/// Haar-distributed `SU(3)`: complex Gaussian columns orthonormalized by
/// Gram-Schmidt (positive real `R` diagonal), then scaled by a cube root
/// of `det⁻¹`.
pub fn random_su3(sampler: &mut RotationSampler) -> UnitaryMatrix {
    loop {
        let z = CMat3::from_fn(|_, _| Complex64::new(sampler.next_normal(), sampler.next_normal()));
        if let Some(q) = gram_schmidt(&z) {
            let phase = q.det().powf(-1.0 / 3.0);
            let m = q.scale(phase);
            if let Ok(u) = UnitaryMatrix::new(m, DEFAULT_UNITARY_TOL) {
                return u;
            }
        }
    }
}

fn gram_schmidt(z: &CMat3) -> Option<CMat3> {
    let mut cols: Vec<CVec3> = Vec::with_capacity(3);
    for j in Idx::ALL {
        let mut v = z.col(j);
        // Two passes keep the columns orthogonal to working precision.
        for _ in 0..2 {
            for c in &cols {
                let proj: Complex64 = (0..3).map(|k| c.0[k].conj() * v.0[k]).sum();
                v = v - c.scale(proj);
            }
        }
        let n = v.norm();
        if !(n > 1e-8) {
            return None;
        }
        cols.push(v.scale(Complex64::new(1.0 / n, 0.0)));
    }
    Some(CMat3::from_fn(|i, j| cols[j].0[i]))
}
