//! sl2 and sl_n constructors, right sl2-modules, weight spaces, and the
//! decomposition of a finite-dimensional right module into irreducibles.
//!
//! Right actions follow the right Leibniz identity, so the homomorphism law
//! reads `R_{[a,b]} = R_b R_a - R_a R_b`.

mod modules;
mod simple;

pub use modules::{
    action_from_algebra, decompose, irreducible_module, is_irreducible, weight_decomposition,
    ModuleAction, WeightDecomposition,
};
pub use simple::{sl2_canonical, sln};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepsError {
    #[error("sl_n needs rank n in 2..=9, got {0}")]
    BadDimension(usize),
    #[error("action of h is not diagonalizable")]
    NonDiagonalizable,
    #[error("action of h has a non-integer eigenvalue")]
    NonIntegerSpectrum,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("subspace is not invariant under the action: {0}")]
    NotInvariant(String),
    #[error("acting algebra is not a canonical sl2 copy")]
    NotSl2Actor,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
