//! Exact-arithmetic construction and verification of affine (left-symmetric)
//! structures on nilpotent Lie algebras.
//!
//! Everything computes over arbitrary-precision rationals — no floating
//! point. The crate provides:
//!
//! - [`scalar`], [`poly`], [`matrix`], [`subspace`]: exact scalars,
//!   multivariate polynomials, matrices over either, reduced row-echelon
//!   subspaces, Faddeev–LeVerrier characteristic polynomials, generalized
//!   eigenspaces and rational spectra.
//! - [`lie`]: validated structure-constant Lie algebras, central series,
//!   centers, nilpotency and filiformity, the model algebras.
//! - [`rep`]: validated matrix representations, kernels and faithfulness,
//!   symbolic nilpotency for all elements at once, generalized weight
//!   decompositions, and the weight twist producing faithful nilpotent
//!   representations.
//! - [`connection`]: affine connections with exact torsion/flatness
//!   validation, left/right operators, the induced faithful (n+1)-dimensional
//!   representation, the symbolic completeness decision with witnesses, and
//!   symplectic-form-induced connections.
//! - [`catalog`]: the explicit (n, a, α, β) families on the filiform model
//!   algebras and the end-to-end verification report.
//! - [`io`]: canonical JSON file formats for all of the above.
//!
//! The `parallel` feature (on by default) runs validation sweeps, sampling
//! oracles, and polynomial matrix products on rayon; disabling it falls back
//! to sequential loops with bit-identical results.

pub mod catalog;
pub mod connection;
pub mod error;
pub mod io;
pub mod lie;
pub mod matrix;
pub(crate) mod par;
pub mod poly;
pub mod rep;
pub mod sampling;
pub mod scalar;
pub mod subspace;

pub use connection::{
    symplectic_connection, AffineConnection, Completeness, CompletenessWitness, SignConvention,
    SymplecticForm, SymplecticOutcome,
};
pub use error::{Error, Result};
pub use lie::{CentralSeries, LieAlgebra};
pub use matrix::{Matrix, PolyMatrix, RatMatrix, RationalSpectrum, Ring};
pub use poly::MultiPoly;
pub use rep::{Nilpotentized, Representation, WeightDecomposition};
pub use scalar::Scalar;
pub use subspace::Subspace;
