//! Scalar abstraction: any signed integer type with Euclidean division and
//! integer square roots can drive the whole crate. `BigInt` is the default
//! instantiation (see the aliases in the crate root); `i64`/`i128` work for
//! small experiments and keep the tests honest about genericity.

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, NumRef, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Signed integer scalar. The `NumRef` bound gives `x op &y`; impl blocks
/// that also need `&x op &y` add `for<'a> &'a T: RefNum<T>` locally.
pub trait Scalar:
    Integer
    + Roots
    + Signed
    + NumRef
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Clone
    + Debug
    + Display
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Roots
        + Signed
        + NumRef
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Clone
        + Debug
        + Display
        + 'static
{
}

/// Shorthand for lifting small constants into `T`.
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("small constant must fit the scalar type")
}

/// Floor square root of a non-negative scalar.
pub fn isqrt<T: Scalar>(n: &T) -> T {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// `Some(r)` with `r² = n` when `n` is a perfect square, else `None`.
/// Negative inputs are never squares.
pub fn perfect_sqrt<T: Scalar>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    if &(r.clone() * r.clone()) == n {
        Some(r)
    } else {
        None
    }
}

/// Sign as an `i8` in {-1, 0, 1}.
pub fn sign_i8<T: Scalar>(n: &T) -> i8 {
    if n.is_zero() {
        0
    } else if n.is_negative() {
        -1
    } else {
        1
    }
}
