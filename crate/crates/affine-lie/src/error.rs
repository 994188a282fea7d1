//! Error type shared by every module of the crate.
//!
//! Validation failures carry their exact rational defects so that a rejected
//! hand-entered tensor can be debugged from the error alone. Basis indices in
//! error payloads are 1-based, matching the `X1..Xn` naming and the file
//! formats; internal code is 0-based throughout.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension {got} not allowed (minimum {min})")]
    BadDimension { min: usize, got: usize },

    #[error("antisymmetry violated at (X{i}, X{j}): c[{i}][{j}] + c[{j}][{i}] = {}", fmt_vec(.defect))]
    AntisymmetryViolation {
        i: usize,
        j: usize,
        defect: Vec<Scalar>,
    },

    #[error("Jacobi identity violated at (X{i}, X{j}, X{k}): cyclic sum = {}", fmt_vec(.defect))]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vec<Scalar>,
    },

    #[error("representation matrices malformed: {reason}")]
    ShapeMismatch { reason: String },

    #[error("homomorphism violated at (X{i}, X{j}): [rho(X{i}), rho(X{j})] - rho([X{i}, X{j}]) nonzero")]
    HomomorphismViolation {
        i: usize,
        j: usize,
        defect: Matrix<Scalar>,
    },

    #[error("torsion condition violated at (X{i}, X{j}): defect {}", fmt_vec(.defect))]
    TorsionViolation {
        i: usize,
        j: usize,
        defect: Vec<Scalar>,
    },

    #[error("flatness condition violated at (X{i}, X{j}, X{k}): defect {}", fmt_vec(.defect))]
    FlatnessViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vec<Scalar>,
    },

    #[error("representation does not have the affine block shape: {reason}")]
    NotAffineShape { reason: String },

    #[error("form is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("form is degenerate (rank {rank})")]
    Degenerate { rank: usize },

    #[error("form is not closed at (X{i}, X{j}, X{k}): d-theta = {defect}")]
    NotClosed {
        i: usize,
        j: usize,
        k: usize,
        defect: Scalar,
    },

    #[error("dimension {dim} is odd; a symplectic form needs even dimension")]
    OddDimension { dim: usize },

    #[error("algebra is not nilpotent")]
    NotNilpotentAlgebra,

    #[error("representation is not faithful")]
    NotFaithful,

    #[error("spectrum does not split over Q: {detail}")]
    IrrationalWeights { detail: String },
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}
