//! Transvectants, the quadratic invariant and apolarity.

pub(crate) mod catalectant;

pub use catalectant::{
    catalectant, characteristic_quartic, cubic_action_matrix, CharacteristicQuartic,
};

use crate::error::{Error, Result};
use crate::poly;
use crate::quantic::BinaryQuantic;
use crate::scalar::{binomial, falling, sign, Scalar, C64};

/// Outcome of a transvectant: either a form or the zero form of the
/// expected degree, which [`BinaryQuantic`] cannot hold.
#[derive(Clone, Debug, PartialEq)]
pub enum Transvectant<T: Scalar = C64> {
    Form(BinaryQuantic<T>),
    Zero { degree: usize },
}

impl<T: Scalar> Transvectant<T> {
    fn from_coeffs(coeffs: Vec<T>) -> Self {
        if coeffs.iter().all(|c| c.is_zero()) {
            Self::Zero {
                degree: coeffs.len() - 1,
            }
        } else {
            Self::Form(BinaryQuantic::new(coeffs).expect("nonzero"))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Form(q) => q.degree(),
            Self::Zero { degree } => *degree,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero { .. })
    }

    pub fn form(&self) -> Option<&BinaryQuantic<T>> {
        match self {
            Self::Form(q) => Some(q),
            Self::Zero { .. } => None,
        }
    }

    pub fn into_form(self) -> Option<BinaryQuantic<T>> {
        match self {
            Self::Form(q) => Some(q),
            Self::Zero { .. } => None,
        }
    }

    /// Binomial coefficients, all zero for [`Transvectant::Zero`].
    pub fn coeffs(&self) -> Vec<T> {
        match self {
            Self::Form(q) => q.coeffs().to_vec(),
            Self::Zero { degree } => vec![T::zero(); degree + 1],
        }
    }
}

/// `⟨φ, ψ⟩_k = Σ_j (−1)^j C(k,j) ∂^kφ/∂x^{k−j}∂y^j · ∂^kψ/∂x^j∂y^{k−j}`.
pub fn transvectant<T: Scalar>(
    phi: &BinaryQuantic<T>,
    psi: &BinaryQuantic<T>,
    k: usize,
) -> Result<Transvectant<T>> {
    transvectant_coeffs(phi.coeffs(), psi.coeffs(), k).map(Transvectant::from_coeffs)
}

/// [`transvectant`] on raw binomial coefficient lists, which may be zero.
pub fn transvectant_coeffs<T: Scalar>(phi: &[T], psi: &[T], k: usize) -> Result<Vec<T>> {
    if phi.is_empty() || psi.is_empty() {
        return Err(Error::NoCoefficients);
    }
    let (m, n) = (phi.len() - 1, psi.len() - 1);
    if k > m.min(n) {
        return Err(Error::OrderOutOfRange { k, max: m.min(n) });
    }
    let a = poly::binomial_to_plain(phi);
    let b = poly::binomial_to_plain(psi);
    let mut acc = vec![T::zero(); m + n - 2 * k + 1];
    for j in 0..=k {
        let term = poly::mul(&poly::partial(&a, k - j, j), &poly::partial(&b, j, k - j));
        let weight = sign::<T>(j) * T::from_i64(binomial(k, j));
        poly::add_assign(&mut acc, &poly::scale(&term, &weight));
    }
    Ok(poly::plain_to_binomial(&acc))
}

/// The transvectant divided by `m!/(m−k)! · n!/(n−k)!`, which strips the
/// factorials the derivatives introduce. Its coefficients are bounded by the
/// product of the input Bombieri norms, so it is the right object for
/// relative zero tests.
pub fn normalized_transvectant_coeffs<T: Scalar>(phi: &[T], psi: &[T], k: usize) -> Result<Vec<T>> {
    let raw = transvectant_coeffs(phi, psi, k)?;
    let (m, n) = (phi.len() - 1, psi.len() - 1);
    let scale = T::from_i64(falling(m, k)) * T::from_i64(falling(n, k));
    Ok(raw.into_iter().map(|c| c / scale.clone()).collect())
}

/// `Σ (−1)^k C(m,k) φ_k ψ_{m−k}` for two forms of the same degree `m`.
pub fn apolar_pairing<T: Scalar>(phi: &[T], psi: &[T]) -> Result<T> {
    if phi.len() != psi.len() {
        return Err(Error::CoefficientCount {
            expected: phi.len(),
            got: psi.len(),
        });
    }
    let m = phi.len() - 1;
    Ok((0..=m).fold(T::zero(), |acc, k| {
        acc + sign::<T>(k) * T::from_i64(binomial(m, k)) * phi[k].clone() * psi[m - k].clone()
    }))
}

/// `𝓘(ψ) = Σ (−1)^k C(2n,k) ψ_k ψ_{2n−k}`; exactly zero for odd degree.
pub fn quadratic_invariant<T: Scalar>(q: &BinaryQuantic<T>) -> T {
    quadratic_invariant_coeffs(q.coeffs())
}

pub(crate) fn quadratic_invariant_coeffs<T: Scalar>(c: &[T]) -> T {
    if (c.len() - 1) % 2 == 1 {
        return T::zero();
    }
    apolar_pairing(c, c).expect("same length")
}

/// Whether `φ` (of degree at most `deg ψ`) is apolar to `ψ`: every
/// coefficient of the normalised `⟨ψ, φ⟩_{deg φ}` is below `tol·‖ψ‖·‖φ‖`.
pub fn is_apolar<T: Scalar>(
    psi: &BinaryQuantic<T>,
    phi: &BinaryQuantic<T>,
    tol: f64,
) -> Result<bool> {
    if phi.degree() > psi.degree() {
        return Err(Error::WrongDegree {
            operation: "is_apolar",
            expected: "deg φ ≤ deg ψ",
            got: phi.degree(),
        });
    }
    let t = normalized_transvectant_coeffs(psi.coeffs(), phi.coeffs(), phi.degree())?;
    let scale = psi.bombieri_norm() * phi.bombieri_norm();
    Ok(t.iter().all(|c| c.is_negligible(scale, tol)))
}
