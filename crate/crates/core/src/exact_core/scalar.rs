//! Integer scalar abstraction for the exact kernel.
//!
//! Every verdict-bearing computation is written once against [`ExactInt`] and
//! instantiated for `i64`, `i128` or `BigInt`. Fixed-width instantiations use
//! checked arithmetic throughout, so an undersized scalar surfaces as
//! [`Error::Overflow`] instead of a wrong answer. Callers that want the fast
//! path try a narrow type first and retry with a wider one (see
//! [`with_widening`]).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::Error;

/// Signed integer usable on the exact verdict path.
pub trait ExactInt:
    Integer
    + Signed
    + Roots
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + From<i64>
    + Into<BigInt>
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + From<i64>
        + Into<BigInt>
        + 'static
{
}

#[inline]
pub(crate) fn add<T: ExactInt>(a: &T, b: &T) -> Result<T, Error> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub<T: ExactInt>(a: &T, b: &T) -> Result<T, Error> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T, Error> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Product of all factors, checked at every step.
pub(crate) fn product<T: ExactInt>(factors: &[&T]) -> Result<T, Error> {
    factors.iter().try_fold(T::one(), |acc, f| mul(&acc, f))
}

#[inline]
pub(crate) fn square<T: ExactInt>(a: &T) -> Result<T, Error> {
    mul(a, a)
}

#[inline]
pub(crate) fn small<T: ExactInt>(v: i64) -> T {
    T::from(v)
}

/// `Some(r)` with `r*r == v` when `v` is a perfect square, else `None`.
pub fn exact_sqrt<T: ExactInt>(v: &T) -> Option<T> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (r.clone() * r.clone() == *v).then_some(r)
}

/// Runs the same computation with `i64`, then `i128`, then `BigInt`, moving on only when the
/// narrower scalar overflowed.
pub fn with_widening<R>(
    mut narrow: impl FnMut() -> Result<R, Error>,
    mut wide: impl FnMut() -> Result<R, Error>,
    mut big: impl FnMut() -> Result<R, Error>,
) -> Result<R, Error> {
    match narrow() {
        Err(Error::Overflow) => match wide() {
            Err(Error::Overflow) => big(),
            other => other,
        },
        other => other,
    }
}
