//! Exact scalars and symbolic polynomials: the arithmetic layer under
//! everything else in the crate.

mod poly;
mod scalar;

pub use poly::{symbolic_det3, Monomial, MultiPoly};
pub use scalar::GaussianScalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar: {0:?}")]
    Parse(String),
}
