//! Rotation-axis extraction for 3×3 orthogonal matrices.
//!
//! The axis of a rotation `A` can be read off from closed forms in the
//! entries of `A`: the reciprocal-sum vector [`vector_v`], the skew part
//! [`vector_u`], and the rows of `A + Aᵀ + (1 − tr A)·I` in
//! [`vector_w`]. [`extract_axis`] picks a well-conditioned form, and the
//! remaining modules cover cofactor kernels, the usual rotation
//! parameterizations, the resolvent projection, matrices over `ℤ_p`, and
//! eigenvectors of `SU(3)` matrices.

pub mod axis;
pub mod complex;
pub mod error;
pub mod ff;
pub mod kernel;
pub mod linalg;
pub mod repr;
pub mod resolvent;
pub mod su3;

pub use axis::{
    degenerate_axis, degenerate_family, degenerate_pairs, extract_axis, lemma3_residuals, orient_axis,
    product_identity_residuals, right_hand_vector, rotation_angle, vector_u, vector_v, vector_w, DegenerateBranch,
    DegenerateFamilyParams, EigenReport, Method, MethodTag,
};
pub use complex::{CMat3, CVec3, ComplexScalar};
pub use error::{Error, Result};
pub use kernel::{eigvec_via_cofactors, rank2_kernel_rows, skew_matrix, symmetric_kernel_check, SkewParams};
pub use linalg::{
    cofactor_identity_residual, laplace_cofactor_residual, validate_orthogonal, Idx, Mat3, OrthogonalMatrix, Pair,
    Sign, Vec3, DEFAULT_ORTHO_TOL,
};
pub use resolvent::{complex_eigenvalue, projection_adjugate, projection_contour, ProjectionMethod, ProjectionReport, Radius};
pub use ff::{
    axis_fp, circle_solutions, eigenvalue_one_certificate, fp_inverse, is_special_orthogonal_fp, planar_rotation_embed,
    vector_u_fp, vector_v_fp, vector_w_fp, FpMat3, FpScalar, FpVec3, Prime,
};
pub use su3::{
    random_su3, su3_eigenvalues, su3_eigenvector, su3_paper_form_discrepancy, su3_w, UnitaryMatrix,
};
