use thiserror::Error;

use crate::linalg::Pair;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {0} out of range, expected 1, 2 or 3")]
    IndexOutOfRange(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not orthogonal (max |m^T m - I| = {residual:e})")]
    NotOrthogonal { residual: f64 },

    #[error("matrix has determinant -1 where +1 is required")]
    WrongDeterminant,

    #[error("denominator a_ij + a_ji vanishes for pairs {}", format_pairs(.0))]
    DegenerateDenominator(Vec<Pair>),

    #[error("no off-diagonal pair has a vanishing sum a_ij + a_ji")]
    NotDegenerate,

    #[error("infeasible degenerate-family parameters: {0}")]
    InfeasibleParameters(String),

    #[error("matrix is the identity (up to sign); every vector is an eigenvector")]
    IdentityInput,

    #[error("method {method} is not applicable: {reason}")]
    MethodInapplicable { method: &'static str, reason: String },

    #[error("all cofactor rows vanish; the eigenspace has dimension at least 2")]
    RankDeficient,

    #[error("{0} is not an eigenvalue of the matrix")]
    NotAnEigenvalue(String),

    #[error("quaternion is not unit (|q|^2 = {norm_sq})")]
    NotUnit { norm_sq: f64 },

    #[error("-1 is an eigenvalue (1 + trace = {one_plus_trace:e}); no Cayley parameters exist")]
    MinusOneEigenvalue { one_plus_trace: f64 },

    #[error("reflection normals are parallel; the product is the identity")]
    ParallelReflections,

    #[error("|1 - lambda| = {separation:e} is too small for a separating contour")]
    EigenvalueTooClose { separation: f64 },

    #[error("{0} is not an odd prime below 2^61")]
    NotPrime(u64),

    #[error("modulus {0} exceeds the enumeration bound")]
    ModulusTooLarge(u64),

    #[error("mismatched moduli {0} and {1}")]
    ModulusMismatch(u64, u64),

    #[error("zero has no inverse modulo {0}")]
    ZeroDivisor(u64),

    #[error("matrix is not special orthogonal modulo {0}")]
    NotSpecialOrthogonalFp(u64),

    #[error("a_ij + a_ji vanishes modulo {modulus} for pairs {}", format_pairs(.pairs))]
    DegenerateDenominatorFp { modulus: u64, pairs: Vec<Pair> },

    #[error("({a}, {b}) does not satisfy a^2 + b^2 = 1 modulo {modulus}")]
    NotOnCircle { a: u64, b: u64, modulus: u64 },

    #[error("matrix is not special unitary (residual {residual:e})")]
    NotSpecialUnitary { residual: f64 },

    #[error("cofactor row {0} vanishes; the eigenvalue is not simple")]
    ZeroVector(usize),
}

fn format_pairs(pairs: &[Pair]) -> String {
    let parts: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
