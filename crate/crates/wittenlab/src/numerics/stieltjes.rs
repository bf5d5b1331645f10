//! Recurrence coefficients of orthonormal polynomials from raw moments.
//!
//! This is Chebyshev's moment algorithm. It is badly conditioned in floating
//! point (the Hankel moment matrix grows factorially), so it is generic over
//! the scalar field. With exact rationals it serves as an independent oracle
//! for the closed-form recurrences in [`crate::hermite_basis`].

use crate::error::{Error, Result};
use num::{BigRational, Signed, Zero};

/// The field operations needed by the moment algorithm.
pub trait MomentScalar: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn is_positive(&self) -> bool;
}

impl MomentScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_positive(&self) -> bool {
        *self > 0.0 && self.is_finite()
    }
}

impl MomentScalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

/// Coefficients `β₁, …, β_K` of the orthonormal recurrence
/// `x p_{k−1} = √β_k p_k + α_{k−1} p_{k−1} + √β_{k−1} p_{k−2}` for the measure
/// whose moments are `moment(l) = ∫ xˡ dμ`, `l = 0, …, 2K`.
///
/// The diagonal coefficients `α` vanish for even measures and are not
/// returned. A non-positive `β` signals numerical breakdown and is reported
/// with its index.
pub fn stieltjes_recurrence<T: MomentScalar>(
    mut moment: impl FnMut(usize) -> T,
    k_max: usize,
) -> Result<Vec<T>> {
    let len = 2 * k_max + 1;
    let mu: Vec<T> = (0..len).map(&mut moment).collect();
    if !mu[0].is_positive() {
        return Err(Error::Instability { index: 0 });
    }
    // sigma_prev = σ_{k−2,·}, sigma_cur = σ_{k−1,·}; indices l = 0..len.
    let mut sigma_prev: Vec<T> = vec![T::zero(); len];
    let mut sigma_cur: Vec<T> = mu.clone();
    let mut alpha = mu[1].div(&mu[0]);
    let mut beta_prev = mu[0].clone();
    let mut betas = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut sigma_next = vec![T::zero(); len];
        for l in k..(len - k) {
            sigma_next[l] = sigma_cur[l + 1]
                .sub(&alpha.mul(&sigma_cur[l]))
                .sub(&beta_prev.mul(&sigma_prev[l]));
        }
        if !sigma_next[k].is_positive() {
            return Err(Error::Instability { index: k });
        }
        let beta = sigma_next[k].div(&sigma_cur[k - 1]);
        if !beta.is_positive() {
            return Err(Error::Instability { index: k });
        }
        let next_alpha = if k + 1 < len - k {
            sigma_next[k + 1]
                .div(&sigma_next[k])
                .sub(&sigma_cur[k].div(&sigma_cur[k - 1]))
        } else {
            T::zero()
        };
        betas.push(beta.clone());
        alpha = next_alpha;
        beta_prev = beta;
        sigma_prev = sigma_cur;
        sigma_cur = sigma_next;
    }
    Ok(betas)
}
