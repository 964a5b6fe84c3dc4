use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, FromPrimitive, PrimInt, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Coefficient type for polynomials in `q`: a signed primitive integer whose
/// arithmetic is always performed through the checked operations.
pub trait Coeff:
    PrimInt
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedNeg
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn add_checked(self, rhs: Self) -> Result<Self> {
        self.checked_add(&rhs).ok_or(Error::Overflow("coefficient addition"))
    }

    fn sub_checked(self, rhs: Self) -> Result<Self> {
        self.checked_sub(&rhs).ok_or(Error::Overflow("coefficient subtraction"))
    }

    fn mul_checked(self, rhs: Self) -> Result<Self> {
        self.checked_mul(&rhs).ok_or(Error::Overflow("coefficient multiplication"))
    }

    fn neg_checked(self) -> Result<Self> {
        self.checked_neg().ok_or(Error::Overflow("coefficient negation"))
    }

    fn from_i64_checked(v: i64) -> Result<Self> {
        Self::from_i64(v).ok_or(Error::Overflow("coefficient conversion"))
    }

    fn to_i64_checked(self) -> Result<i64> {
        self.to_i64().ok_or(Error::Overflow("coefficient conversion"))
    }
}

impl Coeff for i8 {}
impl Coeff for i16 {}
impl Coeff for i32 {}
impl Coeff for i64 {}
impl Coeff for i128 {}

/// Checked `i64` helpers for the integer-valued closed forms.
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("integer multiplication"))
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("integer addition"))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("integer subtraction"))
}

/// Divides `num` by `den`, requiring a zero remainder.
pub(crate) fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::Consistency(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(num / den)
}
