//! Truncated formal power series.

use super::{Field, Q};
use crate::error::{Error, Result};

/// Coefficients `c_0..c_N` of a power series truncated after `t^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<S = Q> {
    coeffs: Vec<S>,
}

impl<S: Field> TruncatedSeries<S> {
    /// Series of order `coeffs.len() - 1`; an empty list gives the order-0 zero series.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(S::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![S::zero(); order + 1],
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The series `t` truncated at `order`.
    pub fn t(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { S::one() } else { S::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order, |n| self.coeff(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n].add_ref(&other.coeffs[n]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n].sub_ref(&other.coeffs[n]))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.order(), |n| c.mul_ref(&self.coeffs[n]))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            let mut acc = S::zero();
            for k in 0..=n {
                acc.add_mul(&self.coeffs[k], &other.coeffs[n - k]);
            }
            acc
        })
    }

    /// `f(-t)`.
    pub fn negate_argument(&self) -> Self {
        Self::from_fn(self.order(), |n| {
            if n % 2 == 0 {
                self.coeffs[n].clone()
            } else {
                -self.coeffs[n].clone()
            }
        })
    }
}

/// Coefficients of `f(g(t))` through the smaller of the two orders.
pub fn series_compose<S: Field>(
    f: &TruncatedSeries<S>,
    g: &TruncatedSeries<S>,
) -> Result<TruncatedSeries<S>, S> {
    if !g.coeff(0).is_zero() {
        return Err(Error::CompositionDomain);
    }
    let order = f.order().min(g.order());
    let g = g.truncate(order);
    // Horner: f(g) = c_0 + g·(c_1 + g·(c_2 + ...)).
    let mut acc = TruncatedSeries::zero(order);
    for n in (0..=order).rev() {
        acc = acc.mul(&g);
        acc.coeffs[0] = acc.coeffs[0].add_ref(&f.coeff(n));
    }
    Ok(acc)
}
