//! Scalar abstraction for the whole crate.
//!
//! Everything downstream (matrices, subspaces, structure tensors, polynomials)
//! is generic over a [`Field`]. The blanket impl picks up any numeric type with
//! the usual field operations, so `f32`/`f64` satisfy the bound, but the
//! algorithms here pivot on exact zero tests and are meant for exact scalars.
//! The shipped instantiation is [`crate::Scalar`] (the Gaussian rationals).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A commutative field with exact equality, as far as the type system can say so.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
    + 'static
{
    /// Embeds a small integer.
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embeds into the field")
    }
}

impl<T> Field for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + FromPrimitive
        + 'static
{
}
