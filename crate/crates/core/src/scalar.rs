//! Integer scalar abstraction shared by the exact linear algebra kernels.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer type usable as a matrix entry.
///
/// Implemented for [`BigInt`](num_bigint::BigInt) (the default everywhere in this crate) and for
/// the machine widths `i64`/`i128`. The machine widths are convenient for tests
/// and small inputs; they panic on overflow in debug builds like any other
/// integer arithmetic.
pub trait IntegerScalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_i64(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("i64 fits in every integer scalar")
    }

    /// Nonnegative gcd with `gcd(0, x) = |x|`.
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    /// Nonnegative lcm; zero when either side is zero.
    fn lcm_with(&self, other: &Self) -> Self {
        Integer::lcm(self, other)
    }
}

impl<T> IntegerScalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Gcd of a sequence; zero for an empty sequence.
pub fn gcd_all<'a, T: IntegerScalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc.gcd_with(v))
}

/// Lcm of a sequence; one for an empty sequence.
pub fn lcm_all<'a, T: IntegerScalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::one(), |acc, v| acc.lcm_with(v))
}
