//! Coefficient types for the counting routines.
//!
//! Everything that only adds and multiplies is generic over [`Counting`], a
//! commutative semiring with `0` and `1`. Routines that divide (binomials)
//! additionally need exact integer division, expressed through
//! [`num_integer::Integer`]. `u64` and `u128` work for small indices and
//! overflow quickly; [`crate::BigCount`] never does.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

pub trait Counting:
    Clone
    + std::fmt::Debug
    + PartialEq
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Counting for T where
    T: Clone
        + std::fmt::Debug
        + PartialEq
        + Zero
        + One
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// `Σ a_k b_{m-k}` over `k = 0..=m`.
pub fn convolve_at<T: Counting>(a: &[T], b: &[T], m: usize) -> T {
    (0..=m).fold(T::zero(), |acc, k| acc + &(a[k].clone() * &b[m - k]))
}
