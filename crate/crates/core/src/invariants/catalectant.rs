//! The cubic action `φ ↦ ⟨ψ, φ⟩₃` of a sextic on cubics, its characteristic
//! polynomial, and the degree-four invariant `𝓙`.

use super::{quadratic_invariant, transvectant_coeffs};
use crate::calibration;
use crate::error::{Error, Result};
use crate::poly;
use crate::quantic::BinaryQuantic;
use crate::scalar::{Scalar, C64};

/// Tolerance for the odd coefficients of the characteristic polynomial,
/// relative to the matching power of the Frobenius norm of the matrix.
const ODD_COEFFICIENT_TOL: f64 = 1e-9;

fn require_sextic<T: Scalar>(psi: &BinaryQuantic<T>, operation: &'static str) -> Result<()> {
    if psi.degree() != 6 {
        return Err(Error::WrongDegree {
            operation,
            expected: "6",
            got: psi.degree(),
        });
    }
    Ok(())
}

/// Matrix of `φ ↦ ⟨ψ, φ⟩₃` on plain coefficients in the basis
/// `x³, x²y, xy², y³`; column `j` is the image of the `j`-th monomial.
pub fn cubic_action_matrix<T: Scalar>(psi: &BinaryQuantic<T>) -> Result<[[T; 4]; 4]> {
    require_sextic(psi, "cubic_action_matrix")?;
    let mut m: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
    for j in 0..4 {
        let mut plain = vec![T::zero(); 4];
        plain[j] = T::one();
        let image = transvectant_coeffs(psi.coeffs(), &poly::plain_to_binomial(&plain), 3)?;
        for (i, v) in poly::binomial_to_plain(&image).into_iter().enumerate() {
            m[i][j] = v;
        }
    }
    Ok(m)
}

fn mat_mul<T: Scalar>(a: &[[T; 4]; 4], b: &[[T; 4]; 4]) -> [[T; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(T::zero(), |acc, l| acc + a[i][l].clone() * b[l][j].clone())
        })
    })
}

fn trace<T: Scalar>(a: &[[T; 4]; 4]) -> T {
    (0..4).fold(T::zero(), |acc, i| acc + a[i][i].clone())
}

/// `det(λ·Id − A)` by Faddeev–LeVerrier, highest power first.
pub(crate) fn characteristic_polynomial<T: Scalar>(a: &[[T; 4]; 4]) -> [T; 5] {
    let mut coeffs: [T; 5] = std::array::from_fn(|_| T::zero());
    coeffs[0] = T::one();
    let mut m: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
    for k in 1..=4 {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[k - 1].clone();
        }
        let am = mat_mul(a, &next);
        coeffs[k] = -trace(&am) / T::from_i64(k as i64);
        m = next;
    }
    coeffs
}

fn frobenius<T: Scalar>(a: &[[T; 4]; 4]) -> f64 {
    a.iter()
        .flatten()
        .map(|v| v.to_c64().norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Characteristic polynomial of the cubic action together with the
/// invariants read off from it.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicQuartic<T: Scalar = C64> {
    /// `det(λ·Id − A)`, coefficient of `λ⁴` first.
    pub coefficients: [T; 5],
    /// `𝓘`, from the `λ²` coefficient.
    pub invariant: T,
    /// `𝓙`, from the constant coefficient.
    pub catalectant: T,
    /// `8μ⁴ + 4𝓘μ² − 𝓙` as a binary quartic in `(μ, 1)`; its roots are the
    /// eigenvalues divided by `sqrt(2κ)` where `κ` is the `λ²` scale.
    pub quartic: BinaryQuantic<T>,
}

/// Reads `𝓘` and `𝓙` off `det(λ − A) = λ⁴ + κ𝓘λ² − (κ²/2)𝓙`.
pub fn characteristic_quartic<T: Scalar>(
    psi: &BinaryQuantic<T>,
) -> Result<CharacteristicQuartic<T>> {
    let a = cubic_action_matrix(psi)?;
    let coefficients = characteristic_polynomial(&a);
    let f = frobenius(&a);
    if !coefficients[1].is_negligible(f, ODD_COEFFICIENT_TOL) {
        return Err(Error::CharacteristicNormalization(format!(
            "λ³ coefficient {}",
            coefficients[1].to_c64()
        )));
    }
    if !coefficients[3].is_negligible(f.powi(3), ODD_COEFFICIENT_TOL) {
        return Err(Error::CharacteristicNormalization(format!(
            "λ coefficient {}",
            coefficients[3].to_c64()
        )));
    }
    let kappa: T = calibration::CUBIC_ACTION_SCALE.to_scalar();
    let invariant = coefficients[2].clone() / kappa.clone();
    let catalectant = -T::from_i64(2) * coefficients[4].clone() / (kappa.clone() * kappa);
    let quartic = BinaryQuantic::from_plain(vec![
        T::from_i64(8),
        T::zero(),
        T::from_i64(4) * invariant.clone(),
        T::zero(),
        -catalectant.clone(),
    ])?;
    Ok(CharacteristicQuartic {
        coefficients,
        invariant,
        catalectant,
        quartic,
    })
}

/// `𝓙` from fourth transvectants: a fixed combination of
/// `⟨⟨ψ,ψ⟩₄, ⟨ψ,ψ⟩₄⟩₄` and `𝓘²`.
pub fn catalectant<T: Scalar>(psi: &BinaryQuantic<T>) -> Result<T> {
    require_sextic(psi, "catalectant")?;
    let h = transvectant_coeffs(psi.coeffs(), psi.coeffs(), 4)?;
    let hh = transvectant_coeffs(&h, &h, 4)?;
    let i = quadratic_invariant(psi);
    Ok(
        calibration::CATALECTANT_FOURTH.to_scalar::<T>() * hh[0].clone()
            + calibration::CATALECTANT_SQUARE.to_scalar::<T>() * i.clone() * i,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_i64(n)
    }

    fn sextic(v: [i64; 7]) -> BinaryQuantic<GaussianRational> {
        BinaryQuantic::new(v.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn pure_sixth_power_is_nilpotent() {
        let a = cubic_action_matrix(&sextic([1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(
            characteristic_polynomial(&a),
            [q(1), q(0), q(0), q(0), q(0)]
        );
    }

    #[test]
    fn odd_coefficients_vanish_exactly() {
        let psi = sextic([2, -1, 3, 5, -4, 1, 7]);
        let c = characteristic_polynomial(&cubic_action_matrix(&psi).unwrap());
        assert_eq!(c[1], q(0));
        assert_eq!(c[3], q(0));
    }

    #[test]
    fn both_routes_agree_exactly() {
        for v in [
            [2, -1, 3, 5, -4, 1, 7],
            [1, 0, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, -1, 0],
        ] {
            let psi = sextic(v);
            let cq = characteristic_quartic(&psi).unwrap();
            assert_eq!(cq.invariant, quadratic_invariant(&psi));
            assert_eq!(cq.catalectant, catalectant(&psi).unwrap());
        }
    }

    #[test]
    fn two_sixth_powers_have_vanishing_catalectant() {
        // x⁶ + (x + 2y)⁶ + 0 third power: binomial coefficients 1 + 2^k
        let psi = BinaryQuantic::new((0..7).map(|k| q(1 + (1 << k))).collect()).unwrap();
        assert_eq!(catalectant(&psi).unwrap(), q(0));
    }

    #[test]
    fn wrong_degree() {
        let quartic = BinaryQuantic::new(vec![q(1), q(0), q(0), q(0), q(1)]).unwrap();
        assert!(cubic_action_matrix(&quartic).is_err());
        assert!(catalectant(&quartic).is_err());
    }
}
