//! Machine checks of the structure claims behind the catalog: coefficient
//! systems, normal forms, splitting products, submodule counts, and the sl_n
//! determinant arguments.
//!
//! Each verifier produces a [`VerdictReport`] keyed by a stable theorem id;
//! see [`THEOREM_IDS`] for the ids the command line accepts.

mod eq_system;
mod normalize;
mod report;
mod sln_checks;
mod splitting;

pub use eq_system::{
    check_eq777, quadratic_obstruction, quadratic_vanishes, solve_eq444, CoeffAssignment,
};
pub use normalize::normalize_action;
pub use report::{Check, CheckStatus, VerdictReport};
pub use sln_checks::{determinant_polynomials, verify_prop51, verify_thm52};
pub use splitting::{verify_prop41, verify_splitting, verify_thm28, verify_thm43, SplittingBlocks};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::reps::RepsError;

/// Stable ids of the claims the suite can verify.
pub const THEOREM_IDS: &[&str] = &[
    "lemma-3.1",
    "thm-3.4",
    "prop-4.1",
    "thm-4.2",
    "thm-4.3",
    "prop-5.1",
    "thm-5.2",
    "thm-2.7",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("the e2-action coefficients are all zero; no invertible normalization exists")]
    DegenerateAction,
    #[error("action cannot be normalized: {0}")]
    NotNormalizable(String),
    #[error("blocks do not partition the algebra: {0}")]
    BlockMismatch(String),
    #[error("G is not perfect ([G,G] != G); trivial-action kernel has dimension {kernel_dim}")]
    NotPerfect { kernel_dim: usize },
    #[error("rank {0} is outside the verified range (n = 3 or 4)")]
    BadRank(usize),
    #[error("input algebra has the wrong shape: {0}")]
    BadShape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reps(#[from] RepsError),
}
