//! Möbius-invariant geometry of point configurations on the sphere.

use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::quadratic_invariant;
use crate::moebius::{Extended, MoebiusMap, PointCP1, COINCIDENCE_TOL};
use crate::quantic::BinaryQuantic;
use crate::roots::roots_of;
use crate::scalar::{Scalar, C64};

/// Cross-ratio type of the four roots of a binary quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossRatioClass {
    Generic,
    /// Cross-ratio orbit `{−1, 2, 1/2}`.
    Harmonic,
    /// Cross-ratio a primitive sixth root of unity.
    Equianharmonic,
    /// Repeated roots; multiplicities in decreasing order.
    Degenerate(Vec<usize>),
}

impl fmt::Display for CrossRatioClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generic => write!(f, "Generic"),
            Self::Harmonic => write!(f, "Harmonic"),
            Self::Equianharmonic => write!(f, "Equianharmonic"),
            Self::Degenerate(p) => {
                let parts: Vec<String> = p.iter().map(|m| m.to_string()).collect();
                write!(f, "Degenerate({})", parts.join("+"))
            }
        }
    }
}

/// The Möbius map taking `pole` to `∞`: the identity if the pole is exactly
/// `∞`, otherwise `x ↦ 1/(x − p)`.
pub fn pole_map<T: Scalar>(pole: &PointCP1<T>) -> MoebiusMap<T> {
    if pole.beta().is_zero() {
        return MoebiusMap::identity();
    }
    let (u, v) = pole.location();
    MoebiusMap {
        a: T::zero(),
        b: v.clone(),
        c: v,
        d: -u,
    }
}

/// Affine coordinate of `p` after sending `pole` to `∞`.
pub fn project_from<T: Scalar>(pole: &PointCP1<T>, p: &PointCP1<T>) -> Extended<T> {
    if p.coincides(pole, COINCIDENCE_TOL) {
        return Extended::Infinity;
    }
    pole_map(pole).apply(p).affine_coordinate()
}

fn project_all<T: Scalar>(pole: &PointCP1<T>, points: &[&PointCP1<T>]) -> Result<Vec<T>> {
    points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            project_from(pole, p)
                .finite()
                .ok_or(Error::PoleCoincides(i))
        })
        .collect()
}

/// Signed defect `x_sixth − mean(x_others)` after projecting from `pole`,
/// together with the largest projected modulus.
pub fn centroid_defect<T: Scalar>(
    others: &[PointCP1<T>],
    sixth: &PointCP1<T>,
    pole: &PointCP1<T>,
) -> Result<(T, f64)> {
    if others.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let mut refs: Vec<&PointCP1<T>> = others.iter().collect();
    refs.push(sixth);
    let xs = project_all(pole, &refs)?;
    let (last, rest) = xs.split_last().expect("nonempty");
    let sum = rest.iter().fold(T::zero(), |acc, x| acc + x.clone());
    let mean = sum / T::from_i64(rest.len() as i64);
    let scale = xs.iter().map(|x| x.to_c64().norm()).fold(0.0, f64::max);
    Ok((last.clone() - mean, scale))
}

/// Whether `sixth` projects from `pole` to the centroid of the projections
/// of `others`, within `tol` times the largest projected modulus.
pub fn centroid_condition<T: Scalar>(
    others: &[PointCP1<T>],
    sixth: &PointCP1<T>,
    pole: &PointCP1<T>,
    tol: f64,
) -> Result<bool> {
    let (defect, scale) = centroid_defect(others, sixth, pole)?;
    Ok(defect.is_negligible(scale.max(f64::MIN_POSITIVE), tol))
}

/// `(z₄ − z₁)(z₂ − z₃) / ((z₂ − z₁)(z₄ − z₃))`, so that
/// `cross_ratio(0, 1, ∞, λ) = λ`.
pub fn cross_ratio<T: Scalar>(
    p1: &PointCP1<T>,
    p2: &PointCP1<T>,
    p3: &PointCP1<T>,
    p4: &PointCP1<T>,
) -> Result<Extended<T>> {
    let pts = [p1, p2, p3, p4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                let same = |a: usize, b: usize| pts[a].coincides(pts[b], COINCIDENCE_TOL);
                if same(i, j) && same(j, k) {
                    return Err(Error::CoincidentPoints(i, j));
                }
            }
        }
    }
    if p2.coincides(p1, COINCIDENCE_TOL) || p4.coincides(p3, COINCIDENCE_TOL) {
        return Ok(Extended::Infinity);
    }
    let num = p4.bracket(p1) * p2.bracket(p3);
    let den = p2.bracket(p1) * p4.bracket(p3);
    Ok(Extended::Finite(num / den))
}

fn require_quartic<T: Scalar>(q: &BinaryQuantic<T>, operation: &'static str) -> Result<()> {
    if q.degree() != 4 {
        return Err(Error::WrongDegree {
            operation,
            expected: "4",
            got: q.degree(),
        });
    }
    Ok(())
}

/// `det [[δ₀,δ₁,δ₂],[δ₁,δ₂,δ₃],[δ₂,δ₃,δ₄]]`, the cubic invariant of a quartic.
pub fn quartic_cubic_invariant<T: Scalar>(q: &BinaryQuantic<T>) -> Result<T> {
    require_quartic(q, "quartic_cubic_invariant")?;
    let d = q.coeffs();
    let e = |i: usize, j: usize| d[i + j].clone();
    Ok(e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0)))
}

/// Multiple of machine epsilon below which a norm-relative invariant is
/// treated as rounding noise.
const ROUNDING_FLOOR: f64 = 1e3;

/// Classifies the roots of a quartic. Repeated roots are found numerically
/// (confirmed by the exact discriminant for exact inputs); otherwise `𝓘 = 0`
/// marks the equianharmonic and the Hankel determinant the harmonic case.
pub fn classify_quartic<T: Scalar>(q: &BinaryQuantic<T>, tol: f64) -> Result<CrossRatioClass> {
    require_quartic(q, "classify_quartic")?;
    let i = quadratic_invariant(q);
    let j = quartic_cubic_invariant(q)?;
    let pattern = if T::EXACT {
        // 𝓘 = 2·I in the classical normalisation, so Δ ∝ 𝓘³ − 216 J².
        let disc = i.clone() * i.clone() * i.clone() - T::from_i64(216) * j.clone() * j.clone();
        if disc.is_zero() {
            roots_of(&q.to_c64(), tol).pattern()
        } else {
            vec![1; 4]
        }
    } else {
        roots_of(&q.to_c64(), tol).pattern()
    };
    if pattern.len() < 4 {
        return Ok(CrossRatioClass::Degenerate(pattern));
    }
    let (equianharmonic, harmonic) = if T::EXACT {
        (i.is_zero(), j.is_zero())
    } else {
        // Compare 𝓘 with |J|^{2/3} and J with |𝓘|^{3/2}: both sides carry the
        // same weight, so the test does not depend on where a Möbius map
        // puts the roots. The floor absorbs rounding in the coefficients.
        let norm = q.bombieri_norm();
        let (ia, ja) = (i.to_c64().norm(), j.to_c64().norm());
        let floor = ROUNDING_FLOOR * f64::EPSILON;
        (
            ia <= (tol * 6.0 * ja.powf(2.0 / 3.0)).max(floor * norm.powi(2)),
            ja <= (tol * ia.powf(1.5) / 216f64.sqrt()).max(floor * norm.powi(3)),
        )
    };
    if equianharmonic {
        Ok(CrossRatioClass::Equianharmonic)
    } else if harmonic {
        Ok(CrossRatioClass::Harmonic)
    } else {
        Ok(CrossRatioClass::Generic)
    }
}

/// Whether a quartic's roots are Möbius-equivalent to the vertices of a
/// regular tetrahedron, or at least three of them coincide.
pub fn is_regular_tetrahedron_class<T: Scalar>(q: &BinaryQuantic<T>, tol: f64) -> Result<bool> {
    Ok(is_tetrahedral(&classify_quartic(q, tol)?))
}

pub fn is_tetrahedral(class: &CrossRatioClass) -> bool {
    match class {
        CrossRatioClass::Equianharmonic => true,
        CrossRatioClass::Degenerate(p) => p[0] >= 3,
        _ => false,
    }
}

/// The Möbius map sending `(p1, p2, p3)` to `(0, 1, ∞)`.
pub fn normalize_three<T: Scalar>(
    p1: &PointCP1<T>,
    p2: &PointCP1<T>,
    p3: &PointCP1<T>,
) -> Result<MoebiusMap<T>> {
    let pts = [p1, p2, p3];
    for i in 0..3 {
        for j in (i + 1)..3 {
            if pts[i].coincides(pts[j], COINCIDENCE_TOL) {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    let (u1, v1) = p1.location();
    let (u2, v2) = p2.location();
    let (u3, v3) = p3.location();
    let s = v3.clone() * u2.clone() - u3.clone() * v2.clone();
    let t = v1.clone() * u2 - u1.clone() * v2;
    MoebiusMap::new(s.clone() * v1, -s * u1, t.clone() * v3, -t * u3)
}

/// The Möbius map sending each `from[i]` to `to[i]`.
pub fn map_three<T: Scalar>(
    from: [&PointCP1<T>; 3],
    to: [&PointCP1<T>; 3],
) -> Result<MoebiusMap<T>> {
    let f = normalize_three(from[0], from[1], from[2])?;
    let g = normalize_three(to[0], to[1], to[2])?;
    Ok(g.inverse().compose(&f))
}

/// The six values `λ, 1−λ, 1/λ, 1/(1−λ), (λ−1)/λ, λ/(λ−1)` a cross ratio
/// takes under reordering of its four points.
pub fn cross_ratio_orbit(lambda: C64) -> [C64; 6] {
    let one = C64::new(1.0, 0.0);
    [
        lambda,
        one - lambda,
        one / lambda,
        one / (one - lambda),
        (lambda - one) / lambda,
        lambda / (lambda - one),
    ]
}
