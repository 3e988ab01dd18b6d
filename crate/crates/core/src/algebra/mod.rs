//! Structure-constant algebras and the operations the rest of the crate is
//! built on: bracket products, the (right) Leibniz identity, the squares
//! ideal, quotients, assemblies, basis changes, and solvability series.
//!
//! Everything uses the right Leibniz convention
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`; module actions are right actions.

mod checks;
mod structure;

pub use checks::{LeibnizReport, LeibnizViolation, SolvabilityInvariants, SquaresIdeal};
pub use structure::{AlgebraStructure, BasisChange, CrossAction};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("coordinate vector has length {got}, algebra dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("assembly shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("basis change matrix is singular")]
    SingularTransform,
}
