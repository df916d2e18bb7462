//! Orthogonal matrices over the prime field ℤ_p, with the axis formulas
//! evaluated in exact modular arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{Idx, Pair};
use crate::repr::RotationSampler;

/// Moduli must lie below this bound so sums of two residues fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 61;
/// `circle_solutions` enumerates the field, so it is limited to small primes.
pub const MAX_CIRCLE_MODULUS: u64 = 1_000_000;

/// An odd prime below [`MAX_MODULUS`], checked by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 3 || p % 2 == 0 || p >= MAX_MODULUS {
            return Err(Error::NotPrime(p));
        }
        let mut d = 3u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 2;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn reduce(x: i64, p: Prime) -> u64 {
    x.rem_euclid(p.0 as i64) as u64
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// An element of ℤ_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: Prime,
}

impl FpScalar {
    pub fn new(value: i64, modulus: Prime) -> FpScalar {
        FpScalar { value: reduce(value, modulus), modulus }
    }

    pub fn from_u64(value: u64, modulus: Prime) -> FpScalar {
        FpScalar { value: value % modulus.0, modulus }
    }

    pub fn zero(modulus: Prime) -> FpScalar {
        FpScalar { value: 0, modulus }
    }

    pub fn one(modulus: Prime) -> FpScalar {
        FpScalar { value: 1, modulus }
    }

    /// Representative in [0, p).
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> FpScalar {
        let p = self.modulus.0;
        let (mut base, mut acc) = (self.value, 1 % p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, p);
            }
            base = mul_mod(base, base, p);
            e >>= 1;
        }
        FpScalar { value: acc, modulus: self.modulus }
    }

    fn same_field(self, other: FpScalar) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.0, other.modulus.0));
        }
        Ok(())
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Arithmetic between different moduli is a programming error and panics.
macro_rules! fp_binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr for FpScalar {
            type Output = FpScalar;
            fn $method(self, o: FpScalar) -> FpScalar {
                assert_eq!(self.modulus, o.modulus, "mismatched moduli");
                FpScalar { value: $f(self.value, o.value, self.modulus.0), modulus: self.modulus }
            }
        }
    };
}

fp_binop!(Add, add, add_mod);
fp_binop!(Sub, sub, sub_mod);
fp_binop!(Mul, mul, mul_mod);

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar { value: sub_mod(0, self.value, self.modulus.0), modulus: self.modulus }
    }
}

/// Multiplicative inverse by the extended Euclidean algorithm.
pub fn fp_inverse(x: FpScalar) -> Result<FpScalar> {
    let p = x.modulus.0;
    if x.value == 0 {
        return Err(Error::ZeroDivisor(p));
    }
    let (mut r0, mut r1) = (p as i128, x.value as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(FpScalar { value: t0.rem_euclid(p as i128) as u64, modulus: x.modulus })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpVec3 {
    values: [u64; 3],
    modulus: Prime,
}

impl FpVec3 {
    pub fn new(values: [i64; 3], modulus: Prime) -> FpVec3 {
        FpVec3 { values: values.map(|v| reduce(v, modulus)), modulus }
    }

    pub fn from_scalars(s: [FpScalar; 3]) -> FpVec3 {
        let modulus = s[0].modulus;
        assert!(s.iter().all(|x| x.modulus == modulus), "mismatched moduli");
        FpVec3 { values: s.map(|x| x.value), modulus }
    }

    pub fn zero(modulus: Prime) -> FpVec3 {
        FpVec3 { values: [0; 3], modulus }
    }

    pub fn values(&self) -> [u64; 3] {
        self.values
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn entry(&self, i: Idx) -> FpScalar {
        FpScalar { value: self.values[i.zero_based()], modulus: self.modulus }
    }

    pub fn is_zero(&self) -> bool {
        self.values == [0; 3]
    }

    pub fn scale(&self, s: FpScalar) -> FpVec3 {
        FpVec3::from_scalars(Idx::ALL.map(|i| self.entry(i) * s))
    }

    /// The multiple whose first non-zero entry is 1 (zero stays zero).
    pub fn canonical(&self) -> FpVec3 {
        match Idx::ALL.into_iter().find(|&i| self.values[i.zero_based()] != 0) {
            Some(i) => self.scale(fp_inverse(self.entry(i)).expect("non-zero entry")),
            None => *self,
        }
    }

    /// True when `u_i v_j ≡ u_j v_i` for all i, j.
    pub fn is_proportional(&self, other: &FpVec3) -> bool {
        if self.modulus != other.modulus {
            return false;
        }
        let p = self.modulus.0;
        let (u, v) = (self.values, other.values);
        (0..3).all(|i| (0..3).all(|j| mul_mod(u[i], v[j], p) == mul_mod(u[j], v[i], p)))
    }
}

impl fmt::Display for FpVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.values;
        write!(f, "({a}, {b}, {c}) mod {}", self.modulus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpMat3 {
    rows: [[u64; 3]; 3],
    modulus: Prime,
}

impl FpMat3 {
    pub fn new(rows: [[i64; 3]; 3], modulus: Prime) -> FpMat3 {
        FpMat3 { rows: rows.map(|r| r.map(|v| reduce(v, modulus))), modulus }
    }

    pub fn from_fn(modulus: Prime, mut f: impl FnMut(Idx, Idx) -> FpScalar) -> FpMat3 {
        let mut rows = [[0u64; 3]; 3];
        for i in Idx::ALL {
            for j in Idx::ALL {
                let x = f(i, j);
                assert_eq!(x.modulus, modulus, "mismatched moduli");
                rows[i.zero_based()][j.zero_based()] = x.value;
            }
        }
        FpMat3 { rows, modulus }
    }

    pub fn identity(modulus: Prime) -> FpMat3 {
        FpMat3::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]], modulus)
    }

    pub fn rows(&self) -> [[u64; 3]; 3] {
        self.rows
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn entry(&self, i: Idx, j: Idx) -> FpScalar {
        FpScalar { value: self.rows[i.zero_based()][j.zero_based()], modulus: self.modulus }
    }

    pub fn row(&self, i: Idx) -> FpVec3 {
        FpVec3 { values: self.rows[i.zero_based()], modulus: self.modulus }
    }

    pub fn transpose(&self) -> FpMat3 {
        FpMat3::from_fn(self.modulus, |i, j| self.entry(j, i))
    }

    pub fn is_identity(&self) -> bool {
        *self == FpMat3::identity(self.modulus)
    }

    pub fn det(&self) -> FpScalar {
        let e = |i: usize, j: usize| self.entry(Idx::from_zero_based(i), Idx::from_zero_based(j));
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    }

    pub fn cofactor_matrix(&self) -> FpMat3 {
        FpMat3::from_fn(self.modulus, |i, j| {
            let (r0, r1) = i.cyclic_rest();
            let (c0, c1) = j.cyclic_rest();
            self.entry(r0, c0) * self.entry(r1, c1) - self.entry(r0, c1) * self.entry(r1, c0)
        })
    }

    pub fn mul_vec(&self, v: &FpVec3) -> FpVec3 {
        assert_eq!(self.modulus, v.modulus, "mismatched moduli");
        FpVec3::from_scalars(Idx::ALL.map(|i| {
            Idx::ALL.into_iter().fold(FpScalar::zero(self.modulus), |acc, k| acc + self.entry(i, k) * v.entry(k))
        }))
    }
}

impl Mul for FpMat3 {
    type Output = FpMat3;
    fn mul(self, o: FpMat3) -> FpMat3 {
        assert_eq!(self.modulus, o.modulus, "mismatched moduli");
        FpMat3::from_fn(self.modulus, |i, j| {
            Idx::ALL.into_iter().fold(FpScalar::zero(self.modulus), |acc, k| acc + self.entry(i, k) * o.entry(k, j))
        })
    }
}

impl Sub for FpMat3 {
    type Output = FpMat3;
    fn sub(self, o: FpMat3) -> FpMat3 {
        FpMat3::from_fn(self.modulus, |i, j| self.entry(i, j) - o.entry(i, j))
    }
}

impl fmt::Display for FpMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(f, "[{:?}, {:?}, {:?}] mod {}", r[0], r[1], r[2], self.modulus)
    }
}

/// `mᵀm = I` and `det m = 1`, exactly.
pub fn is_special_orthogonal_fp(m: &FpMat3) -> bool {
    (m.transpose() * *m).is_identity() && m.det().value == 1
}

fn require_special_orthogonal(m: &FpMat3) -> Result<()> {
    if is_special_orthogonal_fp(m) {
        Ok(())
    } else {
        Err(Error::NotSpecialOrthogonalFp(m.modulus.0))
    }
}

pub fn vector_v_fp(m: &FpMat3) -> Result<FpVec3> {
    require_special_orthogonal(m)?;
    let sum = |pair: Pair| m.entry(pair.first, pair.second) + m.entry(pair.second, pair.first);
    let zero: Vec<Pair> = Pair::ALL.into_iter().filter(|&pair| sum(pair).is_zero()).collect();
    if !zero.is_empty() {
        return Err(Error::DegenerateDenominatorFp { modulus: m.modulus.0, pairs: zero });
    }
    let mut out = [FpScalar::zero(m.modulus); 3];
    for pair in Pair::ALL {
        out[pair.complement().zero_based()] = fp_inverse(sum(pair))?;
    }
    Ok(FpVec3::from_scalars(out))
}

pub fn vector_u_fp(m: &FpMat3) -> Result<FpVec3> {
    require_special_orthogonal(m)?;
    Ok(FpVec3::from_scalars(Idx::ALL.map(|i| {
        let (j, k) = i.cyclic_rest();
        m.entry(j, k) - m.entry(k, j)
    })))
}

pub fn vector_w_fp(m: &FpMat3, i: Idx) -> Result<FpVec3> {
    require_special_orthogonal(m)?;
    let (j, k) = i.cyclic_rest();
    let one = FpScalar::one(m.modulus);
    let mut out = [FpScalar::zero(m.modulus); 3];
    out[i.zero_based()] = one + m.entry(i, i) - m.entry(j, j) - m.entry(k, k);
    out[j.zero_based()] = m.entry(i, j) + m.entry(j, i);
    out[k.zero_based()] = m.entry(i, k) + m.entry(k, i);
    Ok(FpVec3::from_scalars(out))
}

/// The three Lemma-type identities for each i, evaluated mod p; all nine
/// entries are zero on the group.
pub fn lemma3_residuals_fp(m: &FpMat3) -> Result<[FpScalar; 9]> {
    require_special_orthogonal(m)?;
    let one = FpScalar::one(m.modulus);
    let mut out = [FpScalar::zero(m.modulus); 9];
    for i in Idx::ALL {
        let (j, k) = i.cyclic_rest();
        let e = |r: Idx, c: Idx| m.entry(r, c);
        let sum_jk = e(j, k) + e(k, j);
        let r1 = (one + e(i, i)) * sum_jk - (e(i, j) * e(k, i) + e(j, i) * e(i, k));
        let r2 = (e(j, j) + e(k, k)) * sum_jk + (e(i, j) * e(i, k) + e(j, i) * e(k, i));
        let r3 = (e(i, j) * e(i, j) + e(i, k) * e(i, k)) * (e(i, j) * e(i, k) + e(j, i) * e(k, i))
            - (e(i, j) * e(k, i) + e(j, i) * e(i, k)) * (e(i, j) * e(j, i) + e(i, k) * e(k, i));
        let base = 3 * i.zero_based();
        out[base] = r1;
        out[base + 1] = r2;
        out[base + 2] = r3;
    }
    Ok(out)
}

/// A basis of `ker m` by Gauss-Jordan elimination mod p.
pub fn kernel_basis_fp(m: &FpMat3) -> Vec<FpVec3> {
    let p = m.modulus;
    let mut a: Vec<Vec<FpScalar>> =
        Idx::ALL.iter().map(|&i| Idx::ALL.iter().map(|&j| m.entry(i, j)).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..3 {
        let Some(piv) = (row..3).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, piv);
        let inv = fp_inverse(a[row][col]).expect("pivot is non-zero");
        for c in 0..3 {
            a[row][c] = a[row][c] * inv;
        }
        for r in 0..3 {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col];
                for c in 0..3 {
                    a[r][c] = a[r][c] - factor * a[row][c];
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..3)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = [FpScalar::zero(p); 3];
            v[free] = FpScalar::one(p);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free];
            }
            FpVec3::from_scalars(v)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateSource {
    /// A non-zero row of the cofactor matrix of `m − I`.
    CofactorRow(Idx),
    /// Every cofactor row vanished; the vector came from elimination.
    Elimination,
}

/// A non-zero `v` with `m·v = v`, together with `det(m − I)` (always zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelCertificate {
    pub vector: FpVec3,
    pub det_shift: FpScalar,
    pub source: CertificateSource,
}

pub fn eigenvalue_one_certificate(m: &FpMat3) -> Result<KernelCertificate> {
    require_special_orthogonal(m)?;
    if m.is_identity() {
        return Err(Error::IdentityInput);
    }
    let shifted = *m - FpMat3::identity(m.modulus);
    let det_shift = shifted.det();
    let cof = shifted.cofactor_matrix();
    let (vector, source) = match Idx::ALL.into_iter().find(|&i| !cof.row(i).is_zero()) {
        Some(i) => (cof.row(i), CertificateSource::CofactorRow(i)),
        None => {
            let basis = kernel_basis_fp(&shifted);
            (*basis.first().ok_or(Error::RankDeficient)?, CertificateSource::Elimination)
        }
    };
    debug_assert_eq!(m.mul_vec(&vector), vector);
    Ok(KernelCertificate { vector, det_shift, source })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FpAxisMethod {
    V,
    U,
    W(Idx),
    Certificate,
}

impl FpAxisMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            FpAxisMethod::V => "V",
            FpAxisMethod::U => "U",
            FpAxisMethod::W(Idx::I1) => "W1",
            FpAxisMethod::W(Idx::I2) => "W2",
            FpAxisMethod::W(Idx::I3) => "W3",
            FpAxisMethod::Certificate => "CERTIFICATE",
        }
    }
}

/// A fixed vector in canonical scaling, from the first applicable of V, U,
/// W₁–W₃, and the cofactor certificate.
pub fn axis_fp(m: &FpMat3) -> Result<(FpVec3, FpAxisMethod)> {
    require_special_orthogonal(m)?;
    if m.is_identity() {
        return Err(Error::IdentityInput);
    }
    if let Ok(v) = vector_v_fp(m) {
        return Ok((v.canonical(), FpAxisMethod::V));
    }
    let u = vector_u_fp(m)?;
    if !u.is_zero() {
        return Ok((u.canonical(), FpAxisMethod::U));
    }
    for i in Idx::ALL {
        let w = vector_w_fp(m, i)?;
        if !w.is_zero() {
            return Ok((w.canonical(), FpAxisMethod::W(i)));
        }
    }
    let cert = eigenvalue_one_certificate(m)?;
    Ok((cert.vector.canonical(), FpAxisMethod::Certificate))
}

/// All `(a, b)` with `a² + b² ≡ 1`, sorted.
pub fn circle_solutions(p: Prime) -> Result<Vec<(FpScalar, FpScalar)>> {
    let n = p.get();
    if n >= MAX_CIRCLE_MODULUS {
        return Err(Error::ModulusTooLarge(n));
    }
    // Smallest square root of each residue; the other root is p − r.
    let mut root = vec![u64::MAX; n as usize];
    for x in 0..n {
        let s = (x * x % n) as usize;
        if root[s] == u64::MAX {
            root[s] = x;
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        let r = root[sub_mod(1, a * a % n, n) as usize];
        if r == u64::MAX {
            continue;
        }
        out.push((FpScalar::from_u64(a, p), FpScalar::from_u64(r, p)));
        if r != 0 {
            out.push((FpScalar::from_u64(a, p), FpScalar::from_u64(n - r, p)));
        }
    }
    Ok(out)
}

/// The block matrix fixing `e_{fixed_axis}`:
/// `[[1,0,0],[0,a,b],[0,−b,a]]`, `[[a,0,b],[0,1,0],[−b,0,a]]`, or
/// `[[a,b,0],[−b,a,0],[0,0,1]]`.
pub fn planar_rotation_embed(a: FpScalar, b: FpScalar, fixed_axis: Idx) -> Result<FpMat3> {
    a.same_field(b)?;
    let p = a.modulus;
    if !(a * a + b * b - FpScalar::one(p)).is_zero() {
        return Err(Error::NotOnCircle { a: a.value, b: b.value, modulus: p.0 });
    }
    let (av, bv) = (a.value as i64, b.value as i64);
    let rows = match fixed_axis {
        Idx::I1 => [[1, 0, 0], [0, av, bv], [0, -bv, av]],
        Idx::I2 => [[av, 0, bv], [0, 1, 0], [-bv, 0, av]],
        Idx::I3 => [[av, bv, 0], [-bv, av, 0], [0, 0, 1]],
    };
    Ok(FpMat3::new(rows, p))
}

/// A product of `factors` planar rotations with uniformly drawn circle
/// points and fixed axes.
pub fn random_product_fp(p: Prime, factors: usize, sampler: &mut RotationSampler) -> Result<FpMat3> {
    let circle = circle_solutions(p)?;
    let mut m = FpMat3::identity(p);
    for _ in 0..factors {
        let (a, b) = circle[sampler.next_index(circle.len())];
        let axis = Idx::ALL[sampler.next_index(3)];
        m = m * planar_rotation_embed(a, b, axis)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn z5_example() -> FpMat3 {
        FpMat3::new([[-1, -1, -2], [-2, -1, -1], [-1, -2, -1]], p(5))
    }

    #[test]
    fn primes() {
        assert_eq!(p(5).get(), 5);
        assert_eq!(Prime::new(MAX_MODULUS + 1), Err(Error::NotPrime(MAX_MODULUS + 1)));
        for n in [0, 1, 2, 4, 9, 15, 91] {
            assert_eq!(Prime::new(n), Err(Error::NotPrime(n)));
        }
        assert!(Prime::new(1_000_003).is_ok());
    }

    #[test]
    fn scalar_arithmetic_and_inverse() {
        let f = p(7);
        let x = FpScalar::new(-3, f);
        assert_eq!(x.value(), 4);
        assert_eq!((x * FpScalar::new(2, f)).value(), 1);
        assert_eq!(fp_inverse(x).unwrap().value(), 2);
        assert_eq!(fp_inverse(FpScalar::zero(f)), Err(Error::ZeroDivisor(7)));
        for v in 1..7 {
            let s = FpScalar::new(v, f);
            assert_eq!((s * fp_inverse(s).unwrap()).value(), 1);
            assert_eq!(s.pow(6).value(), 1);
        }
        let big = p(1_000_000_007);
        let y = FpScalar::new(123_456_789, big);
        assert_eq!((y * fp_inverse(y).unwrap()).value(), 1);
    }

    #[test]
    fn z5_example_is_special_orthogonal() {
        let m = z5_example();
        assert_eq!(m.rows(), [[4, 4, 3], [3, 4, 4], [4, 3, 4]]);
        assert!(is_special_orthogonal_fp(&m));
        assert_eq!(m.det().value(), 1);
        assert!(is_special_orthogonal_fp(&FpMat3::identity(p(5))));
        let mut rows = m.rows().map(|r| r.map(|v| v as i64));
        rows[0][0] = 0;
        assert!(!is_special_orthogonal_fp(&FpMat3::new(rows, p(5))));
    }

    #[test]
    fn z5_example_vectors() {
        let m = z5_example();
        let v = vector_v_fp(&m).unwrap();
        assert_eq!(v.values(), [3, 3, 3]);
        assert_eq!(v.canonical().values(), [1, 1, 1]);
        assert_eq!(m.mul_vec(&v), v);
        let u = vector_u_fp(&m).unwrap();
        assert_eq!(u.values(), [1, 1, 1]);
        for i in Idx::ALL {
            let w = vector_w_fp(&m, i).unwrap();
            assert_eq!(w.values(), [2, 2, 2]);
            assert!(w.is_proportional(&v));
        }
        assert!(lemma3_residuals_fp(&m).unwrap().iter().all(|r| r.is_zero()));
    }

    #[test]
    fn z5_certificate_regression() {
        let cert = eigenvalue_one_certificate(&z5_example()).unwrap();
        assert_eq!(cert.vector.values(), [2, 2, 2]);
        assert_eq!(cert.source, CertificateSource::CofactorRow(Idx::I1));
        assert!(cert.det_shift.is_zero());
        assert_eq!(axis_fp(&z5_example()).unwrap(), (FpVec3::new([1, 1, 1], p(5)), FpAxisMethod::V));
    }

    #[test]
    fn identity_cases() {
        let id = FpMat3::identity(p(5));
        assert_eq!(
            vector_v_fp(&id),
            Err(Error::DegenerateDenominatorFp { modulus: 5, pairs: Pair::ALL.to_vec() })
        );
        assert_eq!(eigenvalue_one_certificate(&id), Err(Error::IdentityInput));
        assert_eq!(axis_fp(&id), Err(Error::IdentityInput));
        let bad = FpMat3::new([[2, 0, 0], [0, 1, 0], [0, 0, 1]], p(5));
        assert_eq!(vector_u_fp(&bad), Err(Error::NotSpecialOrthogonalFp(5)));
    }

    #[test]
    fn circles() {
        let pairs = |n| -> Vec<(u64, u64)> {
            circle_solutions(p(n)).unwrap().into_iter().map(|(a, b)| (a.value(), b.value())).collect()
        };
        assert_eq!(pairs(5), vec![(0, 1), (0, 4), (1, 0), (4, 0)]);
        assert_eq!(pairs(3), vec![(0, 1), (0, 2), (1, 0), (2, 0)]);
        let seven = pairs(7);
        assert_eq!(seven.len(), 8);
        assert!(seven.contains(&(2, 2)));
        assert_eq!(circle_solutions(p(1_000_003)), Err(Error::ModulusTooLarge(1_000_003)));
    }

    #[test]
    fn planar_embeds() {
        let f = p(7);
        let (a, b) = (FpScalar::new(2, f), FpScalar::new(2, f));
        let m = planar_rotation_embed(a, b, Idx::I1).unwrap();
        assert_eq!(m.rows(), [[1, 0, 0], [0, 2, 2], [0, 5, 2]]);
        let m2 = planar_rotation_embed(a, b, Idx::I2).unwrap();
        assert_eq!(m2.rows(), [[2, 0, 2], [0, 1, 0], [5, 0, 2]]);
        for axis in Idx::ALL {
            let e = planar_rotation_embed(a, b, axis).unwrap();
            assert!(is_special_orthogonal_fp(&e));
            let cert = eigenvalue_one_certificate(&e).unwrap();
            assert!(cert.vector.is_proportional(&FpVec3::from_scalars(Idx::ALL.map(|i| {
                if i == axis { FpScalar::one(f) } else { FpScalar::zero(f) }
            }))));
        }
        assert_eq!(
            planar_rotation_embed(FpScalar::new(1, f), FpScalar::new(1, f), Idx::I3),
            Err(Error::NotOnCircle { a: 1, b: 1, modulus: 7 })
        );
        assert_eq!(
            planar_rotation_embed(FpScalar::new(1, f), FpScalar::new(0, p(5)), Idx::I3),
            Err(Error::ModulusMismatch(7, 5))
        );
    }

    #[test]
    fn elimination_kernel() {
        let f = p(7);
        let m = FpMat3::new([[1, 2, 3], [2, 4, 6], [3, 6, 9]], f);
        let basis = kernel_basis_fp(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).is_zero());
        }
        assert!(kernel_basis_fp(&FpMat3::identity(f)).is_empty());
        assert_eq!(kernel_basis_fp(&FpMat3::new([[0; 3]; 3], f)).len(), 3);
    }

    #[test]
    fn canonical_scaling() {
        let v = FpVec3::new([0, 3, 5], p(7));
        assert_eq!(v.canonical().values(), [0, 1, 4]);
        assert!(v.is_proportional(&v.canonical()));
        assert!(FpVec3::zero(p(7)).canonical().is_zero());
    }

    #[test]
    fn random_products_are_group_elements() {
        let mut s = RotationSampler::new(11);
        for _ in 0..50 {
            let m = random_product_fp(p(13), 4, &mut s).unwrap();
            assert!(is_special_orthogonal_fp(&m));
        }
    }
}
