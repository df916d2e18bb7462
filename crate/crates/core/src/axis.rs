//! Closed-form rotation axes of 3×3 orthogonal matrices.
//!
//! For `A ∈ SO(3)` the vectors
//!
//! ```text
//! V  = (1/(a23+a32), 1/(a13+a31), 1/(a12+a21))
//! U  = (a23−a32, a31−a13, a12−a21)
//! W1 = (1+a11−a22−a33, a12+a21, a13+a31)      (W2, W3 cyclically)
//! ```
//!
//! are all fixed by `A` whenever they exist and are non-zero. For `det A = −1`
//! the same vectors are eigenvectors of `A` for the eigenvalue −1, after
//! replacing `A` by `−A` in the forms that contain the constant 1.
//!
//! [`extract_axis`] picks the best-conditioned form, and
//! [`degenerate_axis`] covers matrices where some `a_ij + a_ji` vanishes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::eigvec_via_cofactors;
use crate::linalg::{Idx, Mat3, OrthogonalMatrix, Pair, Sign, Vec3};
use crate::resolvent::projection_adjugate;

/// `|a_ij + a_ji|` at or below this counts as a vanishing denominator.
pub const EPS_DEG: f64 = 1e-7;
/// `‖U‖∞` at or below this marks the symmetric (half-turn) case.
pub const EPS_SYM: f64 = 1e-7;
/// `max |det(A)·A − I|` at or below this is treated as the identity.
pub const EPS_ID: f64 = 1e-12;

pub fn pair_sum(m: &Mat3, pair: Pair) -> f64 {
    m.entry(pair.first, pair.second) + m.entry(pair.second, pair.first)
}

/// Pairs whose symmetric sum `a_ij + a_ji` is within [`EPS_DEG`] of zero.
pub fn degenerate_pairs(m: &Mat3) -> Vec<Pair> {
    Pair::ALL.into_iter().filter(|&p| pair_sum(m, p).abs() <= EPS_DEG).collect()
}

/// The reciprocal-sum vector V. Also valid for any non-zero multiple `cA`
/// of a rotation, where it scales as `1/c`.
pub fn vector_v(m: &Mat3) -> Result<Vec3> {
    let bad = degenerate_pairs(m);
    if !bad.is_empty() {
        return Err(Error::DegenerateDenominator(bad));
    }
    let mut v = Vec3::zero();
    for pair in Pair::ALL {
        v[pair.complement()] = 1.0 / pair_sum(m, pair);
    }
    Ok(v)
}

/// The skew-difference vector U; zero exactly when `A = Aᵀ`.
pub fn vector_u(m: &Mat3) -> Vec3 {
    let a = &m.rows;
    Vec3::new(a[1][2] - a[2][1], a[2][0] - a[0][2], a[0][1] - a[1][0])
}

/// W_i: the i-th row of the cofactor matrix of `A − I`, simplified with
/// the cofactor identity of SO(3).
pub fn vector_w(m: &Mat3, i: Idx) -> Vec3 {
    let (j, k) = i.cyclic_rest();
    let mut w = Vec3::zero();
    w[i] = 1.0 + m.entry(i, i) - m.entry(j, j) - m.entry(k, k);
    w[j] = m.entry(i, j) + m.entry(j, i);
    w[k] = m.entry(i, k) + m.entry(k, i);
    w
}

/// `(a32−a23, a13−a31, a21−a12) = −U`, which points along the axis under
/// the right-hand rule with length `2 sin t`.
pub fn right_hand_vector(m: &Mat3) -> Vec3 {
    -vector_u(m)
}

/// Residuals of the three quadratic/quartic identities that hold on SO(3),
/// for i = 1, 2, 3 with (j, k) the cyclic successors of i. Entry `3(i−1) + n`
/// is identity `n`.
pub fn lemma3_residuals(a: &OrthogonalMatrix) -> Result<[f64; 9]> {
    if a.det_sign() == Sign::Minus {
        return Err(Error::WrongDeterminant);
    }
    let mut out = [0.0; 9];
    for i in Idx::ALL {
        let (j, k) = i.cyclic_rest();
        let e = |r: Idx, c: Idx| a.entry(r, c);
        let sum_jk = e(j, k) + e(k, j);
        let r1 = (1.0 + e(i, i)) * sum_jk - (e(i, j) * e(k, i) + e(j, i) * e(i, k));
        let r2 = (e(j, j) + e(k, k)) * sum_jk + (e(i, j) * e(i, k) + e(j, i) * e(k, i));
        let r3 = (e(i, j).powi(2) + e(i, k).powi(2)) * (e(i, j) * e(i, k) + e(j, i) * e(k, i))
            - (e(i, j) * e(k, i) + e(j, i) * e(i, k)) * (e(i, j) * e(j, i) + e(i, k) * e(k, i));
        let base = 3 * i.zero_based();
        out[base] = r1.abs();
        out[base + 1] = r2.abs();
        out[base + 2] = r3.abs();
    }
    Ok(out)
}

/// `|(1+a_ii−a_jj−a_kk)(a_jk+a_kj) − (a_ij+a_ji)(a_ik+a_ki)|` for i = 1, 2, 3.
pub fn product_identity_residuals(m: &Mat3) -> [f64; 3] {
    Idx::ALL.map(|i| {
        let (j, k) = i.cyclic_rest();
        let e = |r: Idx, c: Idx| m.entry(r, c);
        let lhs = (1.0 + e(i, i) - e(j, j) - e(k, k)) * (e(j, k) + e(k, j));
        let rhs = (e(i, j) + e(j, i)) * (e(i, k) + e(k, i));
        (lhs - rhs).abs()
    })
}

/// True when `A = ±I` within [`EPS_ID`].
pub fn is_plus_minus_identity(a: &OrthogonalMatrix) -> bool {
    a.proper_part().max_abs_diff(&Mat3::identity()) <= EPS_ID
}

/// Which rule [`degenerate_axis`] applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateBranch {
    /// `pair` is the symmetric pair (i, j); the axis has a zero at `zero_index` = k
    /// and `v_i = a_kj`, `v_j = −a_ki`.
    Pair { pair: Pair, zero_index: Idx },
    /// Column `k` has vanishing off-diagonal entries and is itself the axis.
    Column(Idx),
}

/// Axis for matrices with at least one vanishing `a_ij + a_ji`.
///
/// For `det A = −1` the rule is applied to `−A`, so the returned vector
/// satisfies `A v = det(A) v`.
pub fn degenerate_axis(a: &OrthogonalMatrix) -> Result<(Vec3, DegenerateBranch)> {
    let r = *a.proper_part().matrix();
    if degenerate_pairs(&r).is_empty() {
        return Err(Error::NotDegenerate);
    }
    if is_plus_minus_identity(a) {
        return Err(Error::IdentityInput);
    }

    let off_diagonal = |k: Idx| {
        let (i, j) = k.cyclic_rest();
        [r.entry(i, k), r.entry(j, k), r.entry(k, i), r.entry(k, j)]
            .into_iter()
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    };
    if let Some(k) = Idx::ALL
        .into_iter()
        .find(|&k| off_diagonal(k) <= EPS_DEG && (r.entry(k, k) - 1.0).abs() <= EPS_DEG)
    {
        return Ok((r.col(k), DegenerateBranch::Column(k)));
    }

    let pair = Pair::ALL
        .into_iter()
        .fold(Pair::ALL[0], |best, p| if pair_sum(&r, p).abs() > pair_sum(&r, best).abs() { p } else { best });
    if pair_sum(&r, pair).abs() <= EPS_DEG {
        return Err(Error::MethodInapplicable {
            method: "degenerate",
            reason: "every off-diagonal pair is antisymmetric but no column is isolated".into(),
        });
    }
    let (i, j, k) = (pair.first, pair.second, pair.complement());
    let mut v = Vec3::zero();
    v[i] = r.entry(k, j);
    v[j] = -r.entry(k, i);
    if v.norm_inf() <= EPS_DEG {
        return Err(Error::MethodInapplicable {
            method: "degenerate",
            reason: format!("rule vector for symmetric pair {pair} vanishes"),
        });
    }
    Ok((v, DegenerateBranch::Pair { pair, zero_index: k }))
}

/// Parameters of the two-parameter family of orthogonal matrices
///
/// ```text
/// [[ a,  r,   q ],
///  [−r,  b,   p ],
///  [εq, −εp,  εd]]
/// ```
///
/// with `a − b + d = ±1` (`branch`). The magnitudes of p, q, r follow from
/// row orthogonality; `r_sign` and `q_sign` pick the free signs and the sign
/// of p is then forced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegenerateFamilyParams {
    pub a: f64,
    pub b: f64,
    pub eps: Sign,
    pub branch: Sign,
    pub r_sign: Sign,
    pub q_sign: Sign,
}

impl DegenerateFamilyParams {
    pub fn new(a: f64, b: f64, eps: Sign, branch: Sign) -> DegenerateFamilyParams {
        DegenerateFamilyParams { a, b, eps, branch, r_sign: Sign::Plus, q_sign: Sign::Plus }
    }

    pub fn with_signs(self, r_sign: Sign, q_sign: Sign) -> DegenerateFamilyParams {
        DegenerateFamilyParams { r_sign, q_sign, ..self }
    }

    /// d = branch − a + b.
    pub fn d(&self) -> f64 {
        self.branch.value() - self.a + self.b
    }

    /// The bottom-right entry c = ε d.
    pub fn c(&self) -> f64 {
        self.eps.value() * self.d()
    }

    /// (p², q², r²) = ((a−b)(a+d), (a−b)(d−b), (a+d)(d−b)).
    pub fn squares(&self) -> (f64, f64, f64) {
        let (a, b, d) = (self.a, self.b, self.d());
        ((a - b) * (a + d), (a - b) * (d - b), (a + d) * (d - b))
    }

    /// (p, q, r) with the chosen signs.
    pub fn pqr(&self) -> Result<(f64, f64, f64)> {
        let (p2, q2, r2) = self.squares();
        if p2 < 0.0 || q2 < 0.0 || r2 < 0.0 {
            return Err(Error::InfeasibleParameters(format!(
                "negative square (p^2, q^2, r^2) = ({p2}, {q2}, {r2})"
            )));
        }
        let (a, b, d) = (self.a, self.b, self.d());
        let r = self.r_sign.value() * r2.sqrt();
        let q = self.q_sign.value() * q2.sqrt();
        let p_abs = p2.sqrt();
        // pq = r(a−b), pr = q(a+d), qr = p(d−b)
        let mismatch = |p: f64| {
            (p * q - r * (a - b)).abs() + (p * r - q * (a + d)).abs() + (q * r - p * (d - b)).abs()
        };
        let p = if mismatch(-p_abs) < mismatch(p_abs) { -p_abs } else { p_abs };
        Ok((p, q, r))
    }
}

pub fn degenerate_family(params: DegenerateFamilyParams) -> Result<OrthogonalMatrix> {
    let DegenerateFamilyParams { a, b, eps, .. } = params;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InfeasibleParameters("non-finite parameter".into()));
    }
    if a.abs() >= 1.0 {
        return Err(Error::InfeasibleParameters(format!("|a| = {} is not below 1", a.abs())));
    }
    let (p, q, r) = params.pqr()?;
    let e = eps.value();
    let m = Mat3::new([[a, r, q], [-r, b, p], [e * q, -e * p, params.c()]]);
    OrthogonalMatrix::new(m, 1e-9).map_err(|err| match err {
        Error::NotOrthogonal { residual } => {
            Error::InfeasibleParameters(format!("assembled matrix is not orthogonal (residual {residual:e})"))
        }
        other => other,
    })
}

/// Extraction strategy for [`extract_axis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// U unless it is too small, then the dominant W_i.
    Auto,
    V,
    U,
    W(Idx),
    Cofactor,
    Degenerate,
    Resolvent,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "auto" => Method::Auto,
            "v" => Method::V,
            "u" => Method::U,
            "w1" => Method::W(Idx::I1),
            "w2" => Method::W(Idx::I2),
            "w3" => Method::W(Idx::I3),
            "cofactor" => Method::Cofactor,
            "degenerate" => Method::Degenerate,
            "resolvent" => Method::Resolvent,
            other => return Err(Error::InvalidArgument(format!("unknown method '{other}'"))),
        })
    }
}

/// The construction that produced an [`EigenReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodTag {
    V,
    U,
    W1,
    W2,
    W3,
    DegeneratePair,
    DegenerateColumn,
    Cofactor,
    Resolvent,
}

impl MethodTag {
    pub fn w(i: Idx) -> MethodTag {
        match i {
            Idx::I1 => MethodTag::W1,
            Idx::I2 => MethodTag::W2,
            Idx::I3 => MethodTag::W3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::V => "V",
            MethodTag::U => "U",
            MethodTag::W1 => "W1",
            MethodTag::W2 => "W2",
            MethodTag::W3 => "W3",
            MethodTag::DegeneratePair => "DEGENERATE_PAIR",
            MethodTag::DegenerateColumn => "DEGENERATE_COLUMN",
            MethodTag::Cofactor => "COFACTOR",
            MethodTag::Resolvent => "RESOLVENT",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenReport {
    /// Unit axis, oriented by the right-hand rule.
    pub axis: Vec3,
    /// Rotation angle of `det(A)·A` in [0, π].
    pub angle: f64,
    /// The real eigenvalue ±1, equal to `det A`.
    pub eigenvalue: Sign,
    pub method: MethodTag,
    /// `‖A·axis − eigenvalue·axis‖∞`.
    pub residual: f64,
}

/// Rotation angle of a proper rotation, from `cos t = (tr − 1)/2` and
/// `sin t = ‖U‖/2`.
pub fn rotation_angle(r: &Mat3) -> f64 {
    let sin = 0.5 * vector_u(r).norm();
    let cos = 0.5 * (r.trace() - 1.0);
    sin.atan2(cos)
}

/// Flip `axis` so that it has non-negative dot with the right-hand vector.
/// For half-turns, where that vector vanishes, the first non-negligible
/// component is made positive.
pub fn orient_axis(axis: Vec3, r: &Mat3) -> Vec3 {
    let d = right_hand_vector(r).dot(&axis);
    if d.abs() > 1e-14 {
        return if d < 0.0 { -axis } else { axis };
    }
    match Idx::ALL.into_iter().find(|&i| axis[i].abs() > 1e-12) {
        Some(i) if axis[i] < 0.0 => -axis,
        _ => axis,
    }
}

fn inapplicable(method: &'static str, reason: impl Into<String>) -> Error {
    Error::MethodInapplicable { method, reason: reason.into() }
}

fn dominant_w(r: &Mat3) -> Idx {
    let diag = |i: Idx| vector_w(r, i)[i].abs();
    Idx::ALL.into_iter().fold(Idx::I1, |best, i| if diag(i) > diag(best) { i } else { best })
}

pub fn extract_axis(a: &OrthogonalMatrix, method: Method) -> Result<EigenReport> {
    if is_plus_minus_identity(a) {
        return Err(Error::IdentityInput);
    }
    let proper = a.proper_part();
    let r = *proper.matrix();

    let (raw, tag) = match method {
        Method::Auto => {
            let u = vector_u(&r);
            // Near the identity U is still the best-conditioned form; W_i is O(t²) there.
            if u.norm_inf() > EPS_SYM || r.trace() >= 1.0 {
                (u, MethodTag::U)
            } else {
                let i = dominant_w(&r);
                (vector_w(&r, i), MethodTag::w(i))
            }
        }
        Method::V => (vector_v(&r)?, MethodTag::V),
        Method::U => {
            let u = vector_u(&r);
            if u.norm_inf() <= EPS_SYM {
                return Err(inapplicable("U", "matrix is symmetric (half-turn); U vanishes"));
            }
            (u, MethodTag::U)
        }
        Method::W(i) => {
            let w = vector_w(&r, i);
            if w.norm_inf() <= EPS_SYM {
                return Err(inapplicable("W", format!("W{i} vanishes; the axis is orthogonal to e{i}")));
            }
            (w, MethodTag::w(i))
        }
        Method::Cofactor => {
            let v = eigvec_via_cofactors(&proper, Sign::Plus).map_err(|e| inapplicable("COFACTOR", e.to_string()))?;
            (v, MethodTag::Cofactor)
        }
        Method::Degenerate => {
            let (v, branch) = degenerate_axis(a).map_err(|e| match e {
                Error::MethodInapplicable { .. } => e,
                other => inapplicable("DEGENERATE", other.to_string()),
            })?;
            let tag = match branch {
                DegenerateBranch::Pair { .. } => MethodTag::DegeneratePair,
                DegenerateBranch::Column(_) => MethodTag::DegenerateColumn,
            };
            (v, tag)
        }
        Method::Resolvent => {
            let report = projection_adjugate(&proper).map_err(|e| inapplicable("RESOLVENT", e.to_string()))?;
            let p = report.p;
            let col = Idx::ALL
                .into_iter()
                .map(|j| p.col(j))
                .fold(Vec3::zero(), |best, c| if c.norm_inf() > best.norm_inf() { c } else { best });
            (col, MethodTag::Resolvent)
        }
    };

    let unit = raw
        .normalized()
        .ok_or_else(|| inapplicable(tag.as_str(), "constructed vector is zero"))?;
    let axis = orient_axis(unit, &r);
    let eigenvalue = a.det_sign();
    let residual = (*a.matrix() * axis - axis * eigenvalue.value()).norm_inf();
    Ok(EigenReport { axis, angle: rotation_angle(&r), eigenvalue, method: tag, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{validate_orthogonal, DEFAULT_ORTHO_TOL};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ortho(m: Mat3) -> OrthogonalMatrix {
        validate_orthogonal(m, DEFAULT_ORTHO_TOL).unwrap()
    }

    fn rz90() -> Mat3 {
        Mat3::new([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    }

    /// 2uuᵀ − I for u = (1,1,1)/√3.
    fn half_turn_111() -> Mat3 {
        Mat3::new([[-1.0, 2.0, 2.0], [2.0, -1.0, 2.0], [2.0, 2.0, -1.0]]) * (1.0 / 3.0)
    }

    /// The printed degenerate example with its third row negated.
    fn corrected_family_member() -> Mat3 {
        Mat3::new([[1.0, 2.0, 2.0], [-2.0, -1.0, 2.0], [2.0, -2.0, 1.0]]) * (1.0 / 3.0)
    }

    fn pair(a: usize, b: usize) -> Pair {
        Pair::new(Idx::from_one_based(a).unwrap(), Idx::from_one_based(b).unwrap()).unwrap()
    }

    #[test]
    fn v_on_symmetric_half_turn() {
        let v = vector_v(&half_turn_111()).unwrap();
        for x in v.to_array() {
            assert!((x - 0.75).abs() < 1e-15);
        }
    }

    #[test]
    fn v_raises_on_coordinate_rotation() {
        assert_eq!(vector_v(&rz90()), Err(Error::DegenerateDenominator(vec![pair(1, 2), pair(1, 3), pair(2, 3)])));
    }

    #[test]
    fn u_examples() {
        assert_eq!(vector_u(&rz90()), Vec3::new(0.0, 0.0, -2.0));
        assert_eq!(vector_u(&half_turn_111()), Vec3::zero());
    }

    #[test]
    fn w_examples() {
        assert_eq!(vector_w(&rz90(), Idx::I3), Vec3::new(0.0, 0.0, 2.0));
        assert_eq!(vector_w(&rz90(), Idx::I1), Vec3::zero());
        for i in Idx::ALL {
            assert_eq!(vector_w(&Mat3::identity(), i), Vec3::zero());
        }
    }

    #[test]
    fn lemma3_exact_cases() {
        assert_eq!(lemma3_residuals(&ortho(Mat3::identity())).unwrap(), [0.0; 9]);
        for r in lemma3_residuals(&ortho(rz90())).unwrap() {
            assert!(r <= 1e-15);
        }
        let reflection = ortho(Mat3::diag(1.0, 1.0, -1.0));
        assert_eq!(lemma3_residuals(&reflection), Err(Error::WrongDeterminant));
    }

    #[test]
    fn printed_family_example_is_improper_and_corrected_one_is_proper() {
        let printed = Mat3::new([[1.0, 2.0, 2.0], [-2.0, -1.0, 2.0], [-2.0, 2.0, -1.0]]) * (1.0 / 3.0);
        assert_eq!(ortho(printed).det_sign(), Sign::Minus);
        assert_eq!(ortho(corrected_family_member()).det_sign(), Sign::Plus);
    }

    #[test]
    fn degenerate_pair_rule_on_corrected_example() {
        let a = ortho(corrected_family_member());
        let (v, branch) = degenerate_axis(&a).unwrap();
        assert_eq!(branch, DegenerateBranch::Pair { pair: pair(1, 3), zero_index: Idx::I2 });
        assert_eq!(v.y, 0.0);
        assert!((v.x - v.z).abs() < 1e-15 && v.x > 0.0);
        // Direct multiplication: A (1,0,1)ᵀ = (1,0,1)ᵀ.
        let fixed = *a.matrix() * Vec3::new(1.0, 0.0, 1.0);
        assert!((fixed - Vec3::new(1.0, 0.0, 1.0)).norm_inf() < 1e-15);
    }

    #[test]
    fn degenerate_rule_on_printed_example_gives_minus_one_eigenvector() {
        let printed = ortho(Mat3::new([[1.0, 2.0, 2.0], [-2.0, -1.0, 2.0], [-2.0, 2.0, -1.0]]) * (1.0 / 3.0));
        let (v, _) = degenerate_axis(&printed).unwrap();
        assert!((*printed.matrix() * v + v).norm_inf() < 1e-15);
    }

    #[test]
    fn degenerate_column_and_not_degenerate() {
        let (v, branch) = degenerate_axis(&ortho(rz90())).unwrap();
        assert_eq!(v, Vec3::new(0.0, 0.0, 1.0));
        assert_eq!(branch, DegenerateBranch::Column(Idx::I3));
        assert_eq!(degenerate_axis(&ortho(half_turn_111())), Err(Error::NotDegenerate));
        // Half-turn about e1: every column is isolated, only e1 has eigenvalue +1.
        let (v, branch) = degenerate_axis(&ortho(Mat3::diag(1.0, -1.0, -1.0))).unwrap();
        assert_eq!((v, branch), (Vec3::new(1.0, 0.0, 0.0), DegenerateBranch::Column(Idx::I1)));
    }

    #[test]
    fn family_example_reproduces_corrected_member() {
        let params = DegenerateFamilyParams::new(1.0 / 3.0, -1.0 / 3.0, Sign::Plus, Sign::Plus);
        assert!((params.d() - 1.0 / 3.0).abs() < 1e-15);
        let (p2, q2, r2) = params.squares();
        for s in [p2, q2, r2] {
            assert!((s - 4.0 / 9.0).abs() < 1e-15);
        }
        let a = degenerate_family(params).unwrap();
        assert!(a.max_abs_diff(&corrected_family_member()) < 1e-15);
        assert_eq!(a.det_sign(), Sign::Plus);

        // ε = −1 gives back the printed (improper) matrix.
        let printed = degenerate_family(DegenerateFamilyParams { eps: Sign::Minus, ..params }).unwrap();
        let expected = Mat3::new([[1.0, 2.0, 2.0], [-2.0, -1.0, 2.0], [-2.0, 2.0, -1.0]]) * (1.0 / 3.0);
        assert!(printed.max_abs_diff(&expected) < 1e-15);
        assert_eq!(printed.det_sign(), Sign::Minus);
    }

    #[test]
    fn family_rejects_boundary_and_negative_squares() {
        let at_one = DegenerateFamilyParams::new(1.0, 1.0, Sign::Plus, Sign::Plus);
        assert!(matches!(degenerate_family(at_one), Err(Error::InfeasibleParameters(_))));
        // branch +1 needs a ≥ b.
        let neg = DegenerateFamilyParams::new(0.1, 0.5, Sign::Plus, Sign::Plus);
        assert!(matches!(degenerate_family(neg), Err(Error::InfeasibleParameters(_))));
        let nan = DegenerateFamilyParams::new(f64::NAN, 0.0, Sign::Plus, Sign::Plus);
        assert!(matches!(degenerate_family(nan), Err(Error::InfeasibleParameters(_))));
    }

    #[test]
    fn family_square_labels_follow_row_orthogonality() {
        // With a ≠ d the alternative labelling r² = (a−b)(a+d), p² = (a+d)(d−b)
        // breaks the first row norm; the derived labelling keeps it.
        let params = DegenerateFamilyParams::new(0.5, -0.2, Sign::Plus, Sign::Plus);
        let (a, b, d) = (params.a, params.b, params.d());
        let swapped_r2 = (a - b) * (a + d);
        let (_, q2, r2) = params.squares();
        assert!((a * a + r2 + q2 - 1.0).abs() < 1e-15);
        assert!((a * a + swapped_r2 + q2 - 1.0).abs() > 0.1);
        assert!(degenerate_family(params).unwrap().ortho_residual() < 1e-15);
    }

    #[test]
    fn extract_auto_examples() {
        let r = extract_axis(&ortho(rz90()), Method::Auto).unwrap();
        assert_eq!(r.axis, Vec3::new(0.0, 0.0, 1.0));
        assert!((r.angle - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(r.method, MethodTag::U);
        assert_eq!(r.eigenvalue, Sign::Plus);

        let r = extract_axis(&ortho(half_turn_111()), Method::Auto).unwrap();
        let s = 1.0 / 3.0_f64.sqrt();
        assert!((r.axis - Vec3::new(s, s, s)).norm_inf() < 1e-15);
        assert!((r.angle - PI).abs() < 1e-15);
        assert_eq!(r.method, MethodTag::W1);

        assert_eq!(extract_axis(&ortho(Mat3::identity()), Method::Auto), Err(Error::IdentityInput));
        assert_eq!(extract_axis(&ortho(-Mat3::identity()), Method::Auto), Err(Error::IdentityInput));
    }

    #[test]
    fn extract_forced_methods() {
        let a = ortho(rz90());
        assert!(matches!(extract_axis(&a, Method::V), Err(Error::DegenerateDenominator(_))));
        assert!(matches!(extract_axis(&a, Method::W(Idx::I1)), Err(Error::MethodInapplicable { .. })));
        for m in [Method::W(Idx::I3), Method::Cofactor, Method::Degenerate, Method::Resolvent] {
            let r = extract_axis(&a, m).unwrap();
            assert!((r.axis - Vec3::new(0.0, 0.0, 1.0)).norm_inf() < 1e-15, "{m:?}");
        }
        assert_eq!(extract_axis(&a, Method::Degenerate).unwrap().method, MethodTag::DegenerateColumn);
        let h = ortho(half_turn_111());
        assert!(matches!(extract_axis(&h, Method::U), Err(Error::MethodInapplicable { .. })));
        assert!(matches!(extract_axis(&h, Method::Degenerate), Err(Error::MethodInapplicable { .. })));
    }

    #[test]
    fn extract_on_improper_matrix_reports_minus_one() {
        // Reflection through the xy-plane composed with Rz(90°).
        let m = rz90() * Mat3::diag(1.0, 1.0, -1.0);
        let a = ortho(m);
        let r = extract_axis(&a, Method::Auto).unwrap();
        assert_eq!(r.eigenvalue, Sign::Minus);
        assert!(r.residual < 1e-15);
        assert!(r.axis.line_angle(&Vec3::new(0.0, 0.0, 1.0)) < 1e-15);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("W2".parse::<Method>().unwrap(), Method::W(Idx::I2));
        assert_eq!("resolvent".parse::<Method>().unwrap(), Method::Resolvent);
        assert!("w4".parse::<Method>().is_err());
    }
}
