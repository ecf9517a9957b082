//! Binary quantics in the binomial convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::poly;
use crate::scalar::{binomial, Scalar, C64};

/// A nonzero homogeneous form `Σ C(m,k) ψ_k x^(m-k) y^k`.
///
/// Coefficients are stored in the binomial convention, so `coeffs()[k]` is
/// `ψ_k`. The plain view `C(m,k) ψ_k` is available through
/// [`BinaryQuantic::plain_coeffs`].
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryQuantic<T: Scalar = C64> {
    coeffs: Vec<T>,
}

impl<T: Scalar> BinaryQuantic<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::NoCoefficients);
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        Ok(Self { coeffs })
    }

    pub fn from_plain(plain: Vec<T>) -> Result<Self> {
        if plain.is_empty() {
            return Err(Error::NoCoefficients);
        }
        Self::new(poly::plain_to_binomial(&plain))
    }

    /// Checks the coefficient count against an explicit degree.
    pub fn with_degree(degree: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::CoefficientCount {
                expected: degree + 1,
                got: coeffs.len(),
            });
        }
        Self::new(coeffs)
    }

    /// The monomial `x^(m-k) y^k`.
    pub fn monomial(degree: usize, k: usize) -> Result<Self> {
        if k > degree {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: degree + 1,
            });
        }
        let mut plain = vec![T::zero(); degree + 1];
        plain[k] = T::one();
        Self::from_plain(plain)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn plain_coeffs(&self) -> Vec<T> {
        poly::binomial_to_plain(&self.coeffs)
    }

    pub fn scaled(&self, s: &T) -> Result<Self> {
        Self::new(poly::scale(&self.coeffs, s))
    }

    /// Product of forms, e.g. a quintic times a linear form.
    pub fn mul(&self, other: &Self) -> Self {
        let plain = poly::mul(&self.plain_coeffs(), &other.plain_coeffs());
        Self {
            coeffs: poly::plain_to_binomial(&plain),
        }
    }

    /// Value at the point `(x, y)` of `ℂ²`.
    pub fn evaluate(&self, x: &T, y: &T) -> T {
        let plain = self.plain_coeffs();
        let m = self.degree();
        let mut acc = T::zero();
        for (i, p) in plain.iter().enumerate() {
            acc = acc + p.clone() * crate::scalar::pow(x, m - i) * crate::scalar::pow(y, i);
        }
        acc
    }

    /// Substitutes `x = a x̃ + b ỹ`, `y = c x̃ + d ỹ`.
    ///
    /// Roots move by the inverse map: if `q` vanishes at `p` then
    /// `q.transform(g)` vanishes at `g⁻¹ · p`.
    pub fn transform(&self, g: &MoebiusMap<T>) -> Self {
        let m = self.degree();
        let xs = [g.a.clone(), g.b.clone()];
        let ys = [g.c.clone(), g.d.clone()];
        let mut acc = vec![T::zero(); m + 1];
        let x_powers: Vec<Vec<T>> = (0..=m).map(|e| poly::power(&xs, e)).collect();
        let y_powers: Vec<Vec<T>> = (0..=m).map(|e| poly::power(&ys, e)).collect();
        for (k, p) in self.plain_coeffs().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let term = poly::mul(&x_powers[m - k], &y_powers[k]);
            poly::add_assign(&mut acc, &poly::scale(&term, p));
        }
        // An invertible substitution never annihilates a nonzero form.
        Self {
            coeffs: poly::plain_to_binomial(&acc),
        }
    }

    /// `sqrt(Σ C(m,k) |ψ_k|²)`, the scale every zero test is measured against.
    pub fn bombieri_norm(&self) -> f64 {
        let m = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| binomial(m, k) as f64 * c.to_c64().norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn to_c64(&self) -> BinaryQuantic<C64> {
        BinaryQuantic {
            coeffs: self.coeffs.iter().map(Scalar::to_c64).collect(),
        }
    }

    /// Rescaled so the largest-modulus binomial coefficient is 1.
    pub fn normalized(&self) -> Self {
        let mut best = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.modulus_sqr() > self.coeffs[best].modulus_sqr() {
                best = i;
            }
        }
        let pivot = self.coeffs[best].clone();
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() / pivot.clone())
                .collect(),
        }
    }

    /// Proportionality test: `‖p ∧ q‖ ≤ tol ‖p‖ ‖q‖` on the binomial vectors.
    pub fn is_proportional_to(&self, other: &Self, tol: f64) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let a: Vec<C64> = self.coeffs.iter().map(Scalar::to_c64).collect();
        let b: Vec<C64> = other.coeffs.iter().map(Scalar::to_c64).collect();
        let na = a.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let nb = b.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let mut wedge = 0.0f64;
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                wedge = wedge.max((a[i] * b[j] - a[j] * b[i]).norm());
            }
        }
        wedge <= tol * na * nb
    }
}

impl BinaryQuantic<C64> {
    /// Convenience constructor from real plain coefficients.
    pub fn from_real_plain(plain: &[f64]) -> Result<Self> {
        Self::from_plain(plain.iter().map(|&v| C64::new(v, 0.0)).collect())
    }
}

impl fmt::Display for BinaryQuantic<C64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut first = true;
        for (k, c) in self.plain_coeffs().iter().enumerate() {
            if *c == C64::new(0.0, 0.0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match m - k {
                0 => {}
                1 => write!(f, "x")?,
                e => write!(f, "x^{e}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "y")?,
                e => write!(f, "y^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(matches!(
            BinaryQuantic::<C64>::new(vec![c(0.0); 4]),
            Err(Error::ZeroForm)
        ));
        assert!(matches!(
            BinaryQuantic::<C64>::new(vec![]),
            Err(Error::NoCoefficients)
        ));
        assert!(matches!(
            BinaryQuantic::with_degree(3, vec![c(1.0); 3]),
            Err(Error::CoefficientCount {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn bombieri_norm_examples() {
        let x6 = BinaryQuantic::<C64>::monomial(6, 0).unwrap();
        assert!((x6.bombieri_norm() - 1.0).abs() < 1e-15);
        // x^5 y - x y^5
        let oct = BinaryQuantic::from_real_plain(&[0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0]).unwrap();
        assert!((oct.bombieri_norm() - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        let s = C64::new(3.0, -4.0);
        let scaled = oct.scaled(&s).unwrap();
        assert!((scaled.bombieri_norm() - 5.0 * oct.bombieri_norm()).abs() < 1e-14);
    }

    #[test]
    fn transform_identity_and_swap() {
        let q = BinaryQuantic::from_real_plain(&[1.0, -2.0, 0.5, 3.0]).unwrap();
        assert_eq!(q.transform(&MoebiusMap::identity()), q);
        let x6 = BinaryQuantic::<C64>::monomial(6, 0).unwrap();
        let y6 = BinaryQuantic::<C64>::monomial(6, 6).unwrap();
        assert_eq!(x6.transform(&MoebiusMap::swap()), y6);
    }

    #[test]
    fn evaluate_matches_plain_form() {
        let q: BinaryQuantic<GaussianRational> = BinaryQuantic::from_plain(vec![
            GaussianRational::from_i64(1),
            GaussianRational::from_i64(0),
            GaussianRational::from_i64(-4),
        ])
        .unwrap();
        let two = GaussianRational::from_i64(2);
        let one = GaussianRational::from_i64(1);
        assert_eq!(q.evaluate(&two, &one), GaussianRational::from_i64(0));
    }

    #[test]
    fn normalization_pins_largest_coefficient() {
        let q = BinaryQuantic::from_real_plain(&[2.0, -12.0, 3.0]).unwrap();
        let n = q.normalized();
        // binomial coefficients are (2, -6, 3); the pivot is -6
        assert_eq!(n.coeffs()[1], c(1.0));
        assert!(n.is_proportional_to(&q, 1e-14));
    }
}
