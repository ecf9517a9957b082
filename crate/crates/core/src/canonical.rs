//! Sylvester's canonical form of sextics, the two-parameter self-apolar
//! family, and decomposition into sums of powers of the root factors.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::invariants::quadratic_invariant;
use crate::moebius::PointCP1;
use crate::poly;
use crate::quantic::BinaryQuantic;
use crate::roots::roots_of;
use crate::scalar::{binomial, pow, Scalar, C64};

/// Coefficients of `C u⁶ + A v⁶ + B w⁶ + uvw(u−v)(v−w)(w−u)` with
/// `u = x`, `v = y`, `w = −x − y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterParams<T: Scalar = C64> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> SylvesterParams<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self { a, b, c }
    }

    /// `B`, `C` given and `A = (1 − CB)/(C + B)`, the choice making `𝓘 = 0`.
    pub fn with_solved_a(b: T, c: T) -> Result<Self> {
        let sum = c.clone() + b.clone();
        if sum.is_negligible(c.to_c64().norm() + b.to_c64().norm(), 1e-14) {
            return Err(Error::InvalidParameters("C + B = 0".into()));
        }
        let a = (T::one() - c.clone() * b.clone()) / sum;
        Ok(Self { a, b, c })
    }

    /// The self-apolar slice: `B = (b+c)/(3b−3c)`, `C = (6−b−c)/(3b−3c)`
    /// and `A` solved.
    pub fn from_slice(b: T, c: T) -> Result<Self> {
        let den = T::from_i64(3) * (b.clone() - c.clone());
        if den.is_negligible(b.to_c64().norm() + c.to_c64().norm(), 1e-14) {
            return Err(Error::InvalidParameters("b = c".into()));
        }
        let big_b = (b.clone() + c.clone()) / den.clone();
        let big_c = (T::from_i64(6) - b - c) / den;
        Self::with_solved_a(big_b, big_c)
    }

    /// `2CA + 2CB + 2BA − 2`.
    pub fn invariant_expression(&self) -> T {
        let two = T::from_i64(2);
        two.clone() * self.c.clone() * self.a.clone()
            + two.clone() * self.c.clone() * self.b.clone()
            + two.clone() * self.b.clone() * self.a.clone()
            - two
    }
}

pub fn sylvester_to_sextic<T: Scalar>(p: &SylvesterParams<T>) -> Result<BinaryQuantic<T>> {
    let u = [T::one(), T::zero()];
    let v = [T::zero(), T::one()];
    let w = [-T::one(), -T::one()];
    let diff = |f: &[T; 2], g: &[T; 2]| [f[0].clone() - g[0].clone(), f[1].clone() - g[1].clone()];
    let mut plain = poly::scale(&poly::power(&u, 6), &p.c);
    poly::add_assign(&mut plain, &poly::scale(&poly::power(&v, 6), &p.a));
    poly::add_assign(&mut plain, &poly::scale(&poly::power(&w, 6), &p.b));
    let mut prod = vec![T::one()];
    for f in [
        u.clone(),
        v.clone(),
        w.clone(),
        diff(&u, &v),
        diff(&v, &w),
        diff(&w, &u),
    ] {
        prod = poly::mul(&prod, &f);
    }
    poly::add_assign(&mut plain, &prod);
    BinaryQuantic::from_plain(plain)
}

/// The explicit self-apolar sextic with binomial coefficients
/// `1, b/3, b/3, (b+c)/6, c/3, c/3, (b+c)²/36 + (b−c)²/4`.
pub fn self_apolar_sample<T: Scalar>(b: T, c: T) -> BinaryQuantic<T> {
    let r = |n, d| T::from_ratio(n, d);
    let s = b.clone() + c.clone();
    let d = b.clone() - c.clone();
    let coeffs = vec![
        T::one(),
        r(1, 3) * b.clone(),
        r(1, 3) * b,
        r(1, 6) * s.clone(),
        r(1, 3) * c.clone(),
        r(1, 3) * c,
        r(1, 36) * s.clone() * s + r(1, 4) * d.clone() * d,
    ];
    BinaryQuantic::new(coeffs).expect("leading coefficient is 1")
}

/// `q ≈ Σ c_i ℓ_i^m` with `ℓ_i` the unit-normalised root factors of `q`.
#[derive(Clone, Debug)]
pub struct PowerSumDecomposition {
    pub terms: Vec<(C64, PointCP1)>,
    /// `‖q − Σ c_i ℓ_i^m‖ / ‖q‖` in the Bombieri norm.
    pub residual: f64,
}

impl PowerSumDecomposition {
    pub fn reconstruct(&self) -> Vec<C64> {
        let m = self.terms.len();
        let mut out = vec![C64::new(0.0, 0.0); m + 1];
        for (c, p) in &self.terms {
            for (k, v) in power_coeffs(p, m).into_iter().enumerate() {
                out[k] += c * v;
            }
        }
        out
    }
}

/// Binomial coefficients of `(β x + α y)^m`: `β^{m−k} α^k`.
fn power_coeffs<T: Scalar>(p: &PointCP1<T>, m: usize) -> Vec<T> {
    (0..=m)
        .map(|k| pow(p.beta(), m - k) * pow(p.alpha(), k))
        .collect()
}

fn distinct_roots(q: &BinaryQuantic<C64>, tol: f64) -> Result<Vec<PointCP1>> {
    if q.degree() % 2 == 1 || q.degree() == 0 {
        return Err(Error::WrongDegree {
            operation: "power_sum_decompose",
            expected: "positive even degree",
            got: q.degree(),
        });
    }
    let roots = roots_of(q, tol);
    if roots.points().len() != q.degree() {
        return Err(Error::RepeatedRoots);
    }
    Ok(roots.expanded().iter().map(PointCP1::unit).collect())
}

/// Weighted least-squares fit of `q` by the `2n`-th powers of its root
/// factors; the residual certifies (or refutes) `𝓘(q) = 0`.
pub fn power_sum_fit(q: &BinaryQuantic<C64>, tol: f64) -> Result<PowerSumDecomposition> {
    let roots = distinct_roots(q, tol)?;
    let m = q.degree();
    let weights: Vec<f64> = (0..=m).map(|k| (binomial(m, k) as f64).sqrt()).collect();
    let mut a = DMatrix::<C64>::zeros(m + 1, m);
    for (i, p) in roots.iter().enumerate() {
        for (k, v) in power_coeffs(p, m).into_iter().enumerate() {
            a[(k, i)] = v * weights[k];
        }
    }
    let rhs = DVector::from_iterator(m + 1, q.coeffs().iter().zip(&weights).map(|(c, w)| c * *w));
    let svd = a.clone().svd(true, true);
    let sol = svd
        .solve(&rhs, f64::EPSILON * m as f64)
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let residual = (&a * &sol - &rhs).norm() / rhs.norm();
    Ok(PowerSumDecomposition {
        terms: sol.iter().copied().zip(roots).collect(),
        residual,
    })
}

/// [`power_sum_fit`] that fails with the residual when it exceeds `tol`.
pub fn power_sum_decompose(q: &BinaryQuantic<C64>, tol: f64) -> Result<PowerSumDecomposition> {
    let fit = power_sum_fit(q, tol)?;
    if fit.residual > tol {
        return Err(Error::NotPowerSum {
            residual: fit.residual,
        });
    }
    Ok(fit)
}

/// The constants `c_i` of `q = Σ c_i ℓ_i^{2n}` by the differential-operator
/// formula: `∂_ℓ = ℓ₁∂_x − ℓ₀∂_y` kills `ℓ^{2n}`, so applying it for every
/// root but the `i`-th leaves `c_i (2n)! Π_{j≠i} ⟨ℓ_i, ℓ_j⟩₁ · ℓ_i`.
pub fn power_sum_coefficients<T: Scalar>(
    q: &BinaryQuantic<T>,
    roots: &[PointCP1<T>],
) -> Result<Vec<T>> {
    let m = q.degree();
    if roots.len() != m {
        return Err(Error::CoefficientCount {
            expected: m,
            got: roots.len(),
        });
    }
    let factorial = (1..=m).fold(T::one(), |acc, v| acc * T::from_i64(v as i64));
    let mut out = Vec::with_capacity(m);
    for (i, li) in roots.iter().enumerate() {
        let mut p = q.plain_coeffs();
        let mut bracket_product = T::one();
        for (j, lj) in roots.iter().enumerate() {
            if j == i {
                continue;
            }
            let (l0, l1) = (lj.beta().clone(), lj.alpha().clone());
            let dx = poly::partial(&p, 1, 0);
            let dy = poly::partial(&p, 0, 1);
            p = dx
                .iter()
                .zip(&dy)
                .map(|(a, b)| l1.clone() * a.clone() - l0.clone() * b.clone())
                .collect();
            bracket_product = bracket_product * (li.beta().clone() * l1 - li.alpha().clone() * l0);
        }
        let (i0, i1) = (li.beta().clone(), li.alpha().clone());
        let cross = p[0].clone() * i1.clone() - p[1].clone() * i0.clone();
        let size = p[0].to_c64().norm() + p[1].to_c64().norm();
        if !cross.is_negligible(size, 1e-9) {
            return Err(Error::NotPowerSum {
                residual: cross.to_c64().norm() / size,
            });
        }
        let ratio = if i0.to_c64().norm() >= i1.to_c64().norm() && !i0.is_zero() {
            p[0].clone() / i0
        } else {
            p[1].clone() / i1
        };
        if bracket_product.is_zero() {
            return Err(Error::RepeatedRoots);
        }
        out.push(ratio / (factorial.clone() * bracket_product));
    }
    Ok(out)
}

/// Relative distance of `q` from the span of its root powers, in closed
/// form: `|𝓘(q)| / ‖q‖²`.
pub fn power_sum_residual_bound(q: &BinaryQuantic<C64>) -> f64 {
    quadratic_invariant(q).norm() / q.bombieri_norm().powi(2)
}
