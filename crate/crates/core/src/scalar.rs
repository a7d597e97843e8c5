//! The scalar trait for natural-number matrices.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive, Unsigned};

/// Unsigned integer types usable as [`NatMatrix`](crate::nat::NatMatrix)
/// entries. Fixed-width types overflow loudly through the checked ops.
pub trait Natural:
    Integer
    + Unsigned
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Natural for T where
    T: Integer
        + Unsigned
        + CheckedAdd
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// `2^k`, or `None` on overflow.
pub fn pow2<T: Natural>(k: usize) -> Option<T> {
    num_traits::checked_pow(T::from_u8(2)?, k)
}
