//! Generating series of the pre-Poisson and dual pre-Poisson operads.

use crate::error::{Error, Result};
use crate::kernel::{series_compose, Field, TruncatedSeries, Q};

fn require_order<S: Field>(order: usize, min: usize) -> Result<(), S> {
    if order < min {
        return Err(Error::Invalid(format!("order {order} is below the minimum {min}")));
    }
    Ok(())
}

/// `(1 − 2t − √(1−4t)) / 2t = Σ_{n≥1} C_n tⁿ`, generated by the Catalan
/// recurrence `C_{n+1} = Σ_{k=0..n} C_k C_{n−k}`.
pub fn series_prepois<S: Field>(order: usize) -> Result<TruncatedSeries<S>, S> {
    require_order::<S>(order, 1)?;
    let mut catalan: Vec<S> = vec![S::one()];
    for n in 0..order {
        let mut next = S::zero();
        for k in 0..=n {
            next.add_mul(&catalan[k], &catalan[n - k]);
        }
        catalan.push(next);
    }
    Ok(TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            S::zero()
        } else {
            catalan[n].clone()
        }
    }))
}

/// `t/(1−t)² = Σ_{n≥1} n tⁿ`.
pub fn series_dualprepois<S: Field>(order: usize) -> Result<TruncatedSeries<S>, S> {
    require_order::<S>(order, 1)?;
    Ok(TruncatedSeries::from_fn(order, |n| S::from_i64(n as i64)))
}

/// `f_DPP(−f_pP(−t)) − t` through `order`.
pub fn gk_check<S: Field>(order: usize) -> Result<TruncatedSeries<S>, S> {
    require_order::<S>(order, 2)?;
    let inner = series_prepois::<S>(order)?.negate_argument().neg();
    let outer = series_dualprepois::<S>(order)?;
    Ok(series_compose(&outer, &inner)?.sub(&TruncatedSeries::t(order)))
}

/// `dim DualprePois(n) = n·n!`.
pub fn operad_dim(n: usize) -> Result<u128, Q> {
    if n == 0 {
        return Err(Error::Invalid("arity must be at least 1".into()));
    }
    (1..=n as u128)
        .try_fold(n as u128, |acc, k| acc.checked_mul(k))
        .ok_or_else(|| Error::Invalid(format!("n·n! overflows at n = {n}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    #[test]
    fn catalan_prefix() {
        let s = series_prepois::<Q>(5).unwrap();
        let expected: Vec<Q> = [0, 1, 2, 5, 14, 42].iter().map(|&c| int(c)).collect();
        assert_eq!(s.coeffs(), expected.as_slice());
    }

    #[test]
    fn dual_series_is_n() {
        let s = series_dualprepois::<Q>(4).unwrap();
        let expected: Vec<Q> = (0..=4).map(int).collect();
        assert_eq!(s.coeffs(), expected.as_slice());
    }

    #[test]
    fn gk_residual_vanishes() {
        assert!(gk_check::<Q>(2).unwrap().is_zero());
        let r = gk_check::<Q>(12).unwrap();
        assert_eq!(r.order(), 12);
        assert!(r.is_zero());
    }

    #[test]
    fn orders_below_minimum_are_rejected() {
        assert!(series_prepois::<Q>(0).is_err());
        assert!(gk_check::<Q>(1).is_err());
        assert!(operad_dim(0).is_err());
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(operad_dim(1).unwrap(), 1);
        assert_eq!(operad_dim(2).unwrap(), 4);
        assert_eq!(operad_dim(3).unwrap(), 18);
    }
}
