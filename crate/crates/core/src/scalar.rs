//! Coefficient fields.
//!
//! Everything algebraic is generic over [`Scalar`], which is implemented for
//! double precision complex numbers ([`C64`]) and for Gaussian rationals
//! ([`GaussianRational`]). The exact field is what the calibration constants
//! and the polynomial identities are checked in; root finding and anything
//! that needs a square root stays in floating point.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

pub type C64 = Complex<f64>;
pub type GaussianRational = Complex<BigRational>;

/// Default relative tolerance for zero tests.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A field of complex numbers, either floating or exact.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    type Real: PartialOrd + Clone + Debug;

    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_c64(&self) -> C64;

    fn modulus_sqr(&self) -> Self::Real;

    /// Zero test against `tol * scale`. Exact fields ignore the tolerance.
    fn is_negligible(&self, scale: f64, tol: f64) -> bool;

    fn i() -> Self;
}

impl Scalar for C64 {
    type Real = f64;
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        C64::new(num as f64 / den as f64, 0.0)
    }

    fn to_c64(&self) -> C64 {
        *self
    }

    fn modulus_sqr(&self) -> f64 {
        self.norm_sqr()
    }

    fn is_negligible(&self, scale: f64, tol: f64) -> bool {
        self.norm() <= tol * scale
    }

    fn i() -> Self {
        C64::new(0.0, 1.0)
    }
}

impl Scalar for GaussianRational {
    type Real = BigRational;
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Complex::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    fn to_c64(&self) -> C64 {
        C64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn modulus_sqr(&self) -> BigRational {
        self.norm_sqr()
    }

    fn is_negligible(&self, _scale: f64, _tol: f64) -> bool {
        self.is_zero()
    }

    fn i() -> Self {
        Complex::new(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(1)),
        )
    }
}

/// Gaussian rational `re + i·im` from integer ratios.
pub fn gaussian(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    Complex::new(
        BigRational::new(re.0.into(), re.1.into()),
        BigRational::new(im.0.into(), im.1.into()),
    )
}

/// Exact image of a floating complex number (every finite double is a dyadic rational).
pub fn exact_from_c64(z: C64) -> Option<GaussianRational> {
    Some(Complex::new(
        BigRational::from_float(z.re)?,
        BigRational::from_float(z.im)?,
    ))
}

/// Binomial coefficient as an integer. Exact for the degrees used here (n ≤ 60).
pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as i64
}

/// Falling factorial n (n-1) … (n-k+1).
pub fn falling(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    ((n - k + 1)..=n).fold(1i64, |acc, v| acc * v as i64)
}

pub(crate) fn scalar_binomial<T: Scalar>(n: usize, k: usize) -> T {
    T::from_i64(binomial(n, k))
}

pub(crate) fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

/// `(-1)^k`.
pub(crate) fn sign<T: Scalar>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_falling() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), 137846528820);
        assert_eq!(falling(6, 3), 120);
        assert_eq!(falling(6, 0), 1);
        assert_eq!(falling(2, 3), 0);
    }

    #[test]
    fn exact_negligibility_ignores_tolerance() {
        let tiny = gaussian((1, 1_000_000_000), (0, 1));
        assert!(!tiny.is_negligible(1.0, 1e-3));
        assert!(GaussianRational::from_i64(0).is_negligible(1.0, 0.0));
        assert!(C64::new(1e-12, 0.0).is_negligible(1.0, 1e-9));
    }

    #[test]
    fn dyadic_embedding_is_exact() {
        let z = exact_from_c64(C64::new(0.375, -2.5)).unwrap();
        assert_eq!(z, gaussian((3, 8), (-5, 2)));
        assert!(exact_from_c64(C64::new(f64::NAN, 0.0)).is_none());
    }
}
