//! Coefficient scalar abstraction.
//!
//! Everything in this crate is exact; the scalar is any integer-like type.
//! `i64` is the default for form coefficients, `BigInt` for matrix work
//! where characteristic polynomials and minors overflow machine words.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::Signed;

/// An exact integer scalar. Blanket-implemented; `i64` and
/// `num_bigint::BigInt` are the instantiations used by the crate aliases.
pub trait Scalar:
    Integer + Signed + Clone + Hash + From<i64> + fmt::Display + fmt::Debug + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + From<i64>
        + fmt::Display
        + fmt::Debug
        + Send
        + Sync
        + 'static
{
}
