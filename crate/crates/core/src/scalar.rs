//! The scalar abstraction shared by polynomials, curves and points.
//!
//! Everything in this crate is exact, so the trait describes a field of
//! characteristic zero that contains ℚ: rationals, elements of a cubic
//! field, and rational functions over ℚ all implement it.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Field operations by value and by reference.
pub trait FieldOps<Rhs = Self, Output = Self>:
    Add<Rhs, Output = Output> + Sub<Rhs, Output = Output> + Mul<Rhs, Output = Output> + Div<Rhs, Output = Output>
{
}

impl<T, Rhs, Output> FieldOps<Rhs, Output> for T where
    T: Add<Rhs, Output = Output> + Sub<Rhs, Output = Output> + Mul<Rhs, Output = Output> + Div<Rhs, Output = Output>
{
}

/// An exact field of characteristic zero.
///
/// Division by zero panics, as it does for `BigRational`; fallible
/// inversion lives on the concrete types.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + FieldOps
    + for<'a> FieldOps<&'a Self>
    + Send
    + Sync
    + 'static
{
    /// The image of a rational number.
    fn from_rational(q: &Rational) -> Self;

    /// `Some(q)` when the value lies in ℚ.
    fn to_rational(&self) -> Option<Rational>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    fn recip(&self) -> Self {
        Self::one() / self
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
