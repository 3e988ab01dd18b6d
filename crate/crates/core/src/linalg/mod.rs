//! Exact dense linear algebra: echelon forms, kernels, and the subspace
//! lattice used for ideals, modules, and quotients.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{kernel, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
