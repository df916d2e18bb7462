//! Small fixed-size kernels: 3-vectors, 3×3 matrices, cofactors and
//! orthogonality validation.
//!
//! Indices are 1-based in the public API ([`Idx`]) and 0-based in storage.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Max-norm tolerance on `mᵀm − I` used when none is given.
pub const DEFAULT_ORTHO_TOL: f64 = 1e-9;

/// A row or column index in {1, 2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Idx {
    I1,
    I2,
    I3,
}

impl Idx {
    pub const ALL: [Idx; 3] = [Idx::I1, Idx::I2, Idx::I3];

    pub fn from_one_based(n: usize) -> Result<Idx> {
        match n {
            1 => Ok(Idx::I1),
            2 => Ok(Idx::I2),
            3 => Ok(Idx::I3),
            _ => Err(Error::IndexOutOfRange(n)),
        }
    }

    pub(crate) fn from_zero_based(n: usize) -> Idx {
        Idx::ALL[n]
    }

    pub fn one_based(self) -> usize {
        self.zero_based() + 1
    }

    pub fn zero_based(self) -> usize {
        match self {
            Idx::I1 => 0,
            Idx::I2 => 1,
            Idx::I3 => 2,
        }
    }

    /// The other two indices in cyclic order: (i+1, i+2) mod 3.
    pub fn cyclic_rest(self) -> (Idx, Idx) {
        let i = self.zero_based();
        (Idx::from_zero_based((i + 1) % 3), Idx::from_zero_based((i + 2) % 3))
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_based())
    }
}

/// An unordered off-diagonal index pair, stored with `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub first: Idx,
    pub second: Idx,
}

impl Pair {
    /// (1,2), (1,3), (2,3).
    pub const ALL: [Pair; 3] = [
        Pair { first: Idx::I1, second: Idx::I2 },
        Pair { first: Idx::I1, second: Idx::I3 },
        Pair { first: Idx::I2, second: Idx::I3 },
    ];

    pub fn new(a: Idx, b: Idx) -> Result<Pair> {
        if a == b {
            return Err(Error::InvalidArgument(format!("pair ({a},{b}) is on the diagonal")));
        }
        Ok(if a < b { Pair { first: a, second: b } } else { Pair { first: b, second: a } })
    }

    /// The index not in the pair.
    pub fn complement(self) -> Idx {
        Idx::from_zero_based(3 - self.first.zero_based() - self.second.zero_based())
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Determinant sign of an orthogonal matrix, also used as the real eigenvalue ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3 { x, y, z }
    }

    pub const fn zero() -> Vec3 {
        Vec3::new(0.0, 0.0, 0.0)
    }

    /// Standard basis vector e_i.
    pub fn unit(i: Idx) -> Vec3 {
        let mut v = Vec3::zero();
        v[i] = 1.0;
        v
    }

    pub fn from_array(a: [f64; 3]) -> Vec3 {
        Vec3::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Vector product, `(u₂v₃ − u₃v₂, u₃v₁ − u₁v₃, u₁v₂ − u₂v₁)`.
    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    pub fn norm_inf(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Vec3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(*self * (1.0 / n))
        } else {
            None
        }
    }

    /// Angle between the lines spanned by `self` and `other`, in [0, π/2].
    /// Sign-insensitive; returns π/2 if either vector is zero.
    pub fn line_angle(&self, other: &Vec3) -> f64 {
        let c = self.cross(other).norm();
        let d = self.dot(other).abs();
        if c == 0.0 && d == 0.0 {
            return std::f64::consts::FRAC_PI_2;
        }
        c.atan2(d)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Index<Idx> for Vec3 {
    type Output = f64;
    fn index(&self, i: Idx) -> &f64 {
        match i {
            Idx::I1 => &self.x,
            Idx::I2 => &self.y,
            Idx::I3 => &self.z,
        }
    }
}

impl IndexMut<Idx> for Vec3 {
    fn index_mut(&mut self, i: Idx) -> &mut f64 {
        match i {
            Idx::I1 => &mut self.x,
            Idx::I2 => &mut self.y,
            Idx::I3 => &mut self.z,
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Row-major 3×3 real matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3 {
    pub rows: [[f64; 3]; 3],
}

impl Mat3 {
    pub const fn new(rows: [[f64; 3]; 3]) -> Mat3 {
        Mat3 { rows }
    }

    pub const fn zero() -> Mat3 {
        Mat3::new([[0.0; 3]; 3])
    }

    pub const fn identity() -> Mat3 {
        Mat3::diag(1.0, 1.0, 1.0)
    }

    pub const fn diag(a: f64, b: f64, c: f64) -> Mat3 {
        Mat3::new([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> f64) -> Mat3 {
        let mut rows = [[0.0; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = f(i, j);
            }
        }
        Mat3::new(rows)
    }

    pub fn from_cols(c1: Vec3, c2: Vec3, c3: Vec3) -> Mat3 {
        Mat3::new([[c1.x, c2.x, c3.x], [c1.y, c2.y, c3.y], [c1.z, c2.z, c3.z]])
    }

    /// `u vᵀ`.
    pub fn outer(u: &Vec3, v: &Vec3) -> Mat3 {
        let (u, v) = (u.to_array(), v.to_array());
        Mat3::from_fn(|i, j| u[i] * v[j])
    }

    pub fn entry(&self, i: Idx, j: Idx) -> f64 {
        self.rows[i.zero_based()][j.zero_based()]
    }

    pub fn row(&self, i: Idx) -> Vec3 {
        Vec3::from_array(self.rows[i.zero_based()])
    }

    pub fn col(&self, j: Idx) -> Vec3 {
        let j = j.zero_based();
        Vec3::new(self.rows[0][j], self.rows[1][j], self.rows[2][j])
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.rows[j][i])
    }

    pub fn trace(&self) -> f64 {
        self.rows[0][0] + self.rows[1][1] + self.rows[2][2]
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &Mat3) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_finite())
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> f64 {
        let a = &self.rows;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    /// The 2×2 minor with row `i` and column `j` deleted.
    pub fn minor(&self, i: Idx, j: Idx) -> f64 {
        fn rest(k: usize) -> [usize; 2] {
            match k {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            }
        }
        let (r, c) = (rest(i.zero_based()), rest(j.zero_based()));
        let a = &self.rows;
        a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
    }

    /// `(−1)^{i+j}` times the minor at (i, j).
    pub fn cofactor(&self, i: Idx, j: Idx) -> f64 {
        let m = self.minor(i, j);
        if (i.zero_based() + j.zero_based()) % 2 == 0 {
            m
        } else {
            -m
        }
    }

    /// Matrix whose (i, j) entry is `cofactor(i, j)`.
    pub fn cofactor_matrix(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.cofactor(Idx::from_zero_based(i), Idx::from_zero_based(j)))
    }

    /// Transpose of the cofactor matrix; `m · adj(m) = det(m) · I`.
    pub fn adjugate(&self) -> Mat3 {
        self.cofactor_matrix().transpose()
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.rows[i][j]
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(self, o: Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| self.rows[i][j] + o.rows[i][j])
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(self, o: Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| self.rows[i][j] - o.rows[i][j])
    }
}

impl Neg for Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        Mat3::from_fn(|i, j| -self.rows[i][j])
    }
}

impl Mul<f64> for Mat3 {
    type Output = Mat3;
    fn mul(self, s: f64) -> Mat3 {
        Mat3::from_fn(|i, j| self.rows[i][j] * s)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| (0..3).map(|k| self.rows[i][k] * o.rows[k][j]).sum())
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        let a = &self.rows;
        Vec3::new(
            a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z,
        )
    }
}

/// A matrix that passed orthogonality validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalMatrix {
    m: Mat3,
    ortho_residual: f64,
    det_sign: Sign,
}

impl OrthogonalMatrix {
    /// Accepts `m` iff `max |mᵀm − I| ≤ tol`.
    pub fn new(m: Mat3, tol: f64) -> Result<OrthogonalMatrix> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        if !m.is_finite() {
            return Err(Error::NotOrthogonal { residual: f64::INFINITY });
        }
        let checked = OrthogonalMatrix::measure(m);
        let det_dev = (checked.m.det().abs() - 1.0).abs();
        let residual = checked.ortho_residual;
        if residual > tol {
            return Err(Error::NotOrthogonal { residual });
        }
        if det_dev > 2.0 * tol {
            return Err(Error::NotOrthogonal { residual: det_dev });
        }
        Ok(checked)
    }

    /// Wraps a matrix that is orthogonal by construction, recording its residual.
    pub(crate) fn measure(m: Mat3) -> OrthogonalMatrix {
        let ortho_residual = (m.transpose() * m).max_abs_diff(&Mat3::identity());
        OrthogonalMatrix { m, ortho_residual, det_sign: Sign::of(m.det()) }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn ortho_residual(&self) -> f64 {
        self.ortho_residual
    }

    pub fn det_sign(&self) -> Sign {
        self.det_sign
    }

    /// `−m`, which flips the determinant sign.
    pub fn negated(&self) -> OrthogonalMatrix {
        OrthogonalMatrix { m: -self.m, ortho_residual: self.ortho_residual, det_sign: -self.det_sign }
    }

    /// The proper rotation `det(m) · m`.
    pub fn proper_part(&self) -> OrthogonalMatrix {
        match self.det_sign {
            Sign::Plus => *self,
            Sign::Minus => self.negated(),
        }
    }
}

impl std::ops::Deref for OrthogonalMatrix {
    type Target = Mat3;
    fn deref(&self) -> &Mat3 {
        &self.m
    }
}

pub fn validate_orthogonal(m: Mat3, tol: f64) -> Result<OrthogonalMatrix> {
    OrthogonalMatrix::new(m, tol)
}

/// Entrywise `|cofactor(i,j) − a_ij|`; vanishes on SO(3).
pub fn cofactor_identity_residual(a: &OrthogonalMatrix) -> Result<Mat3> {
    if a.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    let c = a.cofactor_matrix();
    Ok(Mat3::from_fn(|i, j| (c.rows[i][j] - a.rows[i][j]).abs()))
}

/// `max_{i,j} |Σ_k m_ik · cofactor(j,k) − δ_ij det(m)|`.
pub fn laplace_cofactor_residual(m: &Mat3) -> f64 {
    let c = m.cofactor_matrix();
    let det = m.det();
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let s: f64 = (0..3).map(|k| m.rows[i][k] * c.rows[j][k]).sum();
            let expected = if i == j { det } else { 0.0 };
            worst = worst.max((s - expected).abs());
        }
    }
    worst
}
