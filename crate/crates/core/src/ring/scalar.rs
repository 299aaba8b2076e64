use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QSqrt2;

/// Commutative ring element usable as a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Send
        + Sync
{
}

/// A [`Scalar`] with multiplicative inverses for nonzero elements.
pub trait Field: Scalar + std::fmt::Display {
    fn try_inv(&self) -> Option<Self>;

    fn half() -> Self {
        Self::two().try_inv().expect("2 is invertible")
    }
}

macro_rules! impl_float_field {
    ($($t:ty),*) => {$(
        impl Field for $t {
            fn try_inv(&self) -> Option<Self> {
                if *self == 0.0 { None } else { Some(1.0 / *self) }
            }
        }
    )*};
}
impl_float_field!(f32, f64);

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for QSqrt2 {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// Exact reduction of a scalar to an integer, when it is one.
pub trait ToInteger {
    fn to_integer(&self) -> Option<BigInt>;
}

impl ToInteger for BigInt {
    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl ToInteger for BigRational {
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigRational::to_integer(self))
    }
}

impl ToInteger for QSqrt2 {
    fn to_integer(&self) -> Option<BigInt> {
        self.as_integer()
    }
}
