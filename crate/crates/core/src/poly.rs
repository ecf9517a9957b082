//! Dense coefficient-vector arithmetic shared by the form and root modules.
//!
//! A plain vector `p` of length `m + 1` stands for `Σ p[i] x^(m-i) y^i`. The
//! same layout doubles as a univariate polynomial in `x` with the leading
//! coefficient first.

use crate::scalar::{binomial, falling, scalar_binomial, Scalar};

pub(crate) fn mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

pub(crate) fn add_assign<T: Scalar>(acc: &mut [T], other: &[T]) {
    debug_assert_eq!(acc.len(), other.len());
    for (a, b) in acc.iter_mut().zip(other) {
        *a = a.clone() + b.clone();
    }
}

pub(crate) fn scale<T: Scalar>(a: &[T], s: &T) -> Vec<T> {
    a.iter().map(|v| v.clone() * s.clone()).collect()
}

pub(crate) fn power<T: Scalar>(a: &[T], exp: usize) -> Vec<T> {
    let mut acc = vec![T::one()];
    for _ in 0..exp {
        acc = mul(&acc, a);
    }
    acc
}

/// `∂^a/∂x^a ∂^b/∂y^b` of a plain form.
pub(crate) fn partial<T: Scalar>(p: &[T], dx: usize, dy: usize) -> Vec<T> {
    let m = p.len() - 1;
    if dx + dy > m {
        return vec![T::zero()];
    }
    let out_deg = m - dx - dy;
    (0..=out_deg)
        .map(|i| {
            let src = i + dy;
            let factor = falling(m - src, dx) * falling(src, dy);
            p[src].clone() * T::from_i64(factor)
        })
        .collect()
}

pub(crate) fn binomial_to_plain<T: Scalar>(coeffs: &[T]) -> Vec<T> {
    let m = coeffs.len() - 1;
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c.clone() * scalar_binomial::<T>(m, k))
        .collect()
}

pub(crate) fn plain_to_binomial<T: Scalar>(plain: &[T]) -> Vec<T> {
    let m = plain.len() - 1;
    plain
        .iter()
        .enumerate()
        .map(|(k, c)| c.clone() / T::from_i64(binomial(m, k)))
        .collect()
}

/// Horner evaluation of a univariate polynomial given leading coefficient first.
pub(crate) fn eval<T: Scalar>(p: &[T], x: &T) -> T {
    p.iter()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Derivative of a univariate polynomial, leading coefficient first.
pub(crate) fn derivative<T: Scalar>(p: &[T]) -> Vec<T> {
    let n = p.len() - 1;
    if n == 0 {
        return vec![T::zero()];
    }
    p[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c.clone() * T::from_i64((n - i) as i64))
        .collect()
}

/// Quotient of a plain form by the linear form `l[0] x + l[1] y`, dividing
/// from whichever end keeps the pivot larger. The remainder is discarded.
pub(crate) fn divide_linear<T: Scalar>(p: &[T], l: &[T; 2]) -> Vec<T> {
    let m = p.len() - 1;
    let mut q = vec![T::zero(); m];
    let from_top = if T::EXACT {
        !l[0].is_zero()
    } else {
        l[0].to_c64().norm() >= l[1].to_c64().norm()
    };
    if from_top {
        for i in 0..m {
            let carry = if i == 0 {
                T::zero()
            } else {
                l[1].clone() * q[i - 1].clone()
            };
            q[i] = (p[i].clone() - carry) / l[0].clone();
        }
    } else {
        for i in (0..m).rev() {
            let carry = if i + 1 == m {
                T::zero()
            } else {
                l[0].clone() * q[i + 1].clone()
            };
            q[i] = (p[i + 1].clone() - carry) / l[1].clone();
        }
    }
    q
}
