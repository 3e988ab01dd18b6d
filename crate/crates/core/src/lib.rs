//! Exact computer algebra for finite-dimensional Leibniz algebras given by
//! structure constants.
//!
//! The crate builds the classified algebras whose quotient by the squares
//! ideal is a sum of sl2 copies and a small solvable part, checks the Leibniz
//! identity and the splitting structure exhaustively, decomposes right
//! sl2-modules into irreducibles, and replays the coefficient systems and
//! determinant identities behind the classification, all in exact arithmetic.
//!
//! Core math is generic over the scalar [`field::Field`]; the shipped base
//! field is Q(i) (see [`GaussianScalar`]), and the aliases below fix that
//! instantiation:
//!
//! - [`Scalar`], [`Poly`] — exact scalars and sparse polynomials
//! - [`Matrix`], [`Subspace`] — exact linear algebra in canonical form
//! - [`Algebra`], [`Action`] — structure tensors and right actions

pub mod algebra;
pub mod catalog;
pub mod exact;
pub mod field;
pub mod linalg;
pub mod reps;
pub mod verify;

pub use exact::{ExactError, GaussianScalar};

/// The base field used by the shipped tools: the Gaussian rationals Q(i).
pub type Scalar = GaussianScalar;
/// Sparse multivariate polynomials over [`Scalar`].
pub type Poly = exact::MultiPoly<Scalar>;
/// Dense matrices over [`Scalar`].
pub type Matrix = linalg::Matrix<Scalar>;
/// Canonical subspaces over [`Scalar`].
pub type Subspace = linalg::Subspace<Scalar>;
/// Structure-constant algebras over [`Scalar`].
pub type Algebra = algebra::AlgebraStructure<Scalar>;
/// Right module actions over [`Scalar`].
pub type Action = reps::ModuleAction<Scalar>;
