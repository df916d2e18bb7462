use crate::error::{Error, Result};
use crate::kernel::SkewParams;
use crate::linalg::{Mat3, OrthogonalMatrix, Sign};

/// `1 + tr(A)` at or below this means −1 is (numerically) an eigenvalue.
pub const EPS_CAYLEY: f64 = 1e-9;

/// Skew parameters with `A = (I + Q)(I − Q)⁻¹`.
///
/// On SO(3), `Q = (A − I)(A + I)⁻¹` has the closed form
/// `(p, q, r) = (a32 − a23, a13 − a31, a21 − a12) / (1 + tr A)`.
pub fn cayley_decompose(a: &OrthogonalMatrix) -> Result<SkewParams> {
    if a.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    let one_plus_trace = 1.0 + a.trace();
    if one_plus_trace <= EPS_CAYLEY {
        return Err(Error::MinusOneEigenvalue { one_plus_trace });
    }
    let m = &a.matrix().rows;
    Ok(SkewParams::new(
        (m[2][1] - m[1][2]) / one_plus_trace,
        (m[0][2] - m[2][0]) / one_plus_trace,
        (m[1][0] - m[0][1]) / one_plus_trace,
    ))
}

/// `(I + Q)(I − Q)⁻¹` in closed form; always a proper rotation fixing (p, q, r).
pub fn cayley_compose(s: SkewParams) -> OrthogonalMatrix {
    let SkewParams { p, q, r } = s;
    let (pp, qq, rr) = (p * p, q * q, r * r);
    let m = Mat3::new([
        [1.0 + pp - qq - rr, 2.0 * p * q - 2.0 * r, 2.0 * r * p + 2.0 * q],
        [2.0 * p * q + 2.0 * r, 1.0 - pp + qq - rr, 2.0 * q * r - 2.0 * p],
        [2.0 * r * p - 2.0 * q, 2.0 * q * r + 2.0 * p, 1.0 - pp - qq + rr],
    ]);
    OrthogonalMatrix::measure(m * (1.0 / (1.0 + pp + qq + rr)))
}
