//! Complex 3-vectors and 3×3 matrices for the resolvent and SU(3) code.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::linalg::{Idx, Mat3};

pub type ComplexScalar = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CVec3(pub [Complex64; 3]);

impl CVec3 {
    pub fn zero() -> CVec3 {
        CVec3([Complex64::new(0.0, 0.0); 3])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest modulus among the entries.
    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn scale(&self, s: Complex64) -> CVec3 {
        CVec3(self.0.map(|z| z * s))
    }

    /// Scaled to unit 2-norm with the largest-modulus entry real and positive.
    pub fn normalized_phase(&self) -> Option<CVec3> {
        let n = self.norm();
        if !(n > 0.0 && n.is_finite()) {
            return None;
        }
        let pivot = self.0.iter().fold(self.0[0], |best, z| if z.norm() > best.norm() { *z } else { best });
        let phase = pivot.conj() / pivot.norm();
        Some(self.scale(phase / n))
    }

    /// `max_{i,j} |u_i v_j − u_j v_i|`, zero iff the vectors are proportional.
    pub fn proportionality_residual(&self, other: &CVec3) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max((self.0[i] * other.0[j] - self.0[j] * other.0[i]).norm());
            }
        }
        worst
    }
}

impl Index<Idx> for CVec3 {
    type Output = Complex64;
    fn index(&self, i: Idx) -> &Complex64 {
        &self.0[i.zero_based()]
    }
}

impl IndexMut<Idx> for CVec3 {
    fn index_mut(&mut self, i: Idx) -> &mut Complex64 {
        &mut self.0[i.zero_based()]
    }
}

impl Sub for CVec3 {
    type Output = CVec3;
    fn sub(self, o: CVec3) -> CVec3 {
        CVec3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

/// Row-major complex 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CMat3 {
    pub rows: [[Complex64; 3]; 3],
}

impl CMat3 {
    pub fn new(rows: [[Complex64; 3]; 3]) -> CMat3 {
        CMat3 { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> CMat3 {
        let mut rows = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, z) in row.iter_mut().enumerate() {
                *z = f(i, j);
            }
        }
        CMat3::new(rows)
    }

    pub fn identity() -> CMat3 {
        CMat3::from_fn(|i, j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn from_real(m: &Mat3) -> CMat3 {
        CMat3::from_fn(|i, j| Complex64::new(m.rows[i][j], 0.0))
    }

    /// Real parts.
    pub fn re(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.rows[i][j].re)
    }

    /// Largest absolute imaginary part.
    pub fn max_abs_im(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0_f64, |m, z| m.max(z.im.abs()))
    }

    pub fn entry(&self, i: Idx, j: Idx) -> Complex64 {
        self.rows[i.zero_based()][j.zero_based()]
    }

    pub fn col(&self, j: Idx) -> CVec3 {
        let j = j.zero_based();
        CVec3([self.rows[0][j], self.rows[1][j], self.rows[2][j]])
    }

    pub fn row(&self, i: Idx) -> CVec3 {
        CVec3(self.rows[i.zero_based()])
    }

    pub fn conj_transpose(&self) -> CMat3 {
        CMat3::from_fn(|i, j| self.rows[j][i].conj())
    }

    pub fn scale(&self, s: Complex64) -> CMat3 {
        CMat3::from_fn(|i, j| self.rows[i][j] * s)
    }

    pub fn trace(&self) -> Complex64 {
        self.rows[0][0] + self.rows[1][1] + self.rows[2][2]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn det(&self) -> Complex64 {
        let a = &self.rows;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    pub fn cofactor_matrix(&self) -> CMat3 {
        let a = &self.rows;
        CMat3::from_fn(|i, j| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            // Cyclic successor ordering already carries the (−1)^{i+j} sign.
            a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]
        })
    }

    pub fn adjugate(&self) -> CMat3 {
        let c = self.cofactor_matrix();
        CMat3::from_fn(|i, j| c.rows[j][i])
    }
}

impl Add for CMat3 {
    type Output = CMat3;
    fn add(self, o: CMat3) -> CMat3 {
        CMat3::from_fn(|i, j| self.rows[i][j] + o.rows[i][j])
    }
}

impl Sub for CMat3 {
    type Output = CMat3;
    fn sub(self, o: CMat3) -> CMat3 {
        CMat3::from_fn(|i, j| self.rows[i][j] - o.rows[i][j])
    }
}

impl Mul for CMat3 {
    type Output = CMat3;
    fn mul(self, o: CMat3) -> CMat3 {
        CMat3::from_fn(|i, j| (0..3).map(|k| self.rows[i][k] * o.rows[k][j]).sum())
    }
}

impl Mul<CVec3> for CMat3 {
    type Output = CVec3;
    fn mul(self, v: CVec3) -> CVec3 {
        CVec3([0, 1, 2].map(|i| (0..3).map(|k| self.rows[i][k] * v.0[k]).sum()))
    }
}
