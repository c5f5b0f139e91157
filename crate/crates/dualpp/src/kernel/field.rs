//! Exact scalar fields.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Arbitrary-precision rationals, the default ground field.
pub type Q = Ratio<BigInt>;

/// An exact field of characteristic zero.
///
/// Every check in this crate decides an identity by testing coefficients
/// against zero, so only exact arithmetic is admissible. The trait is
/// implemented for `Ratio<T>` over signed integer types and nothing else.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;

    /// Ratio of two integers; panics on a zero denominator.
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n).div_ref(&Self::from_i64(d))
    }

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for the scalar type"))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Shorthand for an integer constant in any field.
pub fn int<S: Field>(n: i64) -> S {
    S::from_i64(n)
}

/// Shorthand for `n/d` in any field.
pub fn frac<S: Field>(n: i64, d: i64) -> S {
    S::from_ratio(n, d)
}

pub fn is_zero_vec<S: Field>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_vec<S: Field>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect()
}

pub fn sub_vec<S: Field>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.sub_ref(y)).collect()
}

pub fn scale_vec<S: Field>(c: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| c.mul_ref(x)).collect()
}

/// `acc += c * v`.
pub fn axpy<S: Field>(acc: &mut [S], c: &S, v: &[S]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

/// Unit vector `e_i` of length `n`.
pub fn unit<S: Field>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}
