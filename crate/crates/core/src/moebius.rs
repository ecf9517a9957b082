//! Points of the Riemann sphere, Möbius maps, and root configurations.
//!
//! A point is a homogeneous pair `(α, β)` whose linear form is `β x + α y`,
//! so a finite point has affine coordinate `-α/β` and `∞ = (1 : 0)`. The
//! point's location in `(x : y)` coordinates is `(-α : β)`; Möbius maps act
//! on that location by matrix multiplication.

use crate::error::{Error, Result};
use crate::quantic::BinaryQuantic;
use crate::scalar::{Scalar, C64};

/// Projective distance below which two floating points are the same point.
pub const COINCIDENCE_TOL: f64 = 1e-8;

/// A complex number or `∞`.
#[derive(Clone, Debug, PartialEq)]
pub enum Extended<T = C64> {
    Finite(T),
    Infinity,
}

impl<T> Extended<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointCP1<T: Scalar = C64> {
    alpha: T,
    beta: T,
}

impl<T: Scalar> PointCP1<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(Self { alpha, beta })
    }

    /// The finite point with affine coordinate `x`.
    pub fn affine(x: T) -> Self {
        Self {
            alpha: -x,
            beta: T::one(),
        }
    }

    pub fn infinity() -> Self {
        Self {
            alpha: T::one(),
            beta: T::zero(),
        }
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn beta(&self) -> &T {
        &self.beta
    }

    /// Homogeneous `(x : y)` location.
    pub fn location(&self) -> (T, T) {
        (-self.alpha.clone(), self.beta.clone())
    }

    pub fn from_location(u: T, v: T) -> Result<Self> {
        Self::new(-u, v)
    }

    /// The linear form `β x + α y` vanishing at this point.
    pub fn linear_form(&self) -> BinaryQuantic<T> {
        BinaryQuantic::new(vec![self.beta.clone(), self.alpha.clone()])
            .expect("a point is never (0:0)")
    }

    /// Exact affine coordinate; `∞` when `β` is exactly zero.
    pub fn affine_coordinate(&self) -> Extended<T> {
        if self.beta.is_zero() {
            Extended::Infinity
        } else {
            Extended::Finite(-self.alpha.clone() / self.beta.clone())
        }
    }

    /// `u₁ v₂ − u₂ v₁` on locations; vanishes iff the points coincide.
    pub fn bracket(&self, other: &Self) -> T {
        let (u1, v1) = self.location();
        let (u2, v2) = other.location();
        u1 * v2 - u2 * v1
    }

    /// `|u₁v₂ − u₂v₁| / (‖p₁‖ ‖p₂‖)`, the sine of the chordal angle.
    pub fn projective_distance(&self, other: &Self) -> f64 {
        let b = self.bracket(other).to_c64().norm();
        b / (self.norm() * other.norm())
    }

    pub fn coincides(&self, other: &Self, tol: f64) -> bool {
        if T::EXACT {
            self.bracket(other).is_zero()
        } else {
            self.projective_distance(other) <= tol
        }
    }

    pub fn is_infinity(&self, tol: f64) -> bool {
        self.coincides(&Self::infinity(), tol)
    }

    fn norm(&self) -> f64 {
        (self.alpha.to_c64().norm_sqr() + self.beta.to_c64().norm_sqr()).sqrt()
    }

    pub fn to_c64(&self) -> PointCP1<C64> {
        PointCP1 {
            alpha: self.alpha.to_c64(),
            beta: self.beta.to_c64(),
        }
    }
}

impl PointCP1<C64> {
    /// Affine coordinate, reporting `∞` within the coincidence tolerance.
    pub fn affine_or_infinity(&self, tol: f64) -> Extended<C64> {
        if self.is_infinity(tol) {
            Extended::Infinity
        } else {
            Extended::Finite(-self.alpha / self.beta)
        }
    }

    /// Same point scaled to unit Euclidean norm.
    pub fn unit(&self) -> Self {
        let n = self.norm();
        Self {
            alpha: self.alpha / n,
            beta: self.beta / n,
        }
    }
}

/// `x ↦ (a x + b) / (c x + d)`, acting on `(x : y)` locations as a matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusMap<T: Scalar = C64> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> MoebiusMap<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        let scale = a.to_c64().norm() * d.to_c64().norm() + b.to_c64().norm() * c.to_c64().norm();
        if det.is_zero() || det.is_negligible(scale, 1e-14) {
            return Err(Error::SingularMap);
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    /// Exchanges `x` and `y`, i.e. `x ↦ 1/x`.
    pub fn swap() -> Self {
        Self {
            a: T::zero(),
            b: T::one(),
            c: T::one(),
            d: T::zero(),
        }
    }

    /// `x ↦ s x + t`.
    pub fn affine(s: T, t: T) -> Result<Self> {
        Self::new(s, t, T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// Matrix product `self · other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a.clone() * other.a.clone() + self.b.clone() * other.c.clone(),
            b: self.a.clone() * other.b.clone() + self.b.clone() * other.d.clone(),
            c: self.c.clone() * other.a.clone() + self.d.clone() * other.c.clone(),
            d: self.c.clone() * other.b.clone() + self.d.clone() * other.d.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self {
            a: self.d.clone() / det.clone(),
            b: -self.b.clone() / det.clone(),
            c: -self.c.clone() / det.clone(),
            d: self.a.clone() / det,
        }
    }

    pub fn apply(&self, p: &PointCP1<T>) -> PointCP1<T> {
        let (u, v) = p.location();
        let nu = self.a.clone() * u.clone() + self.b.clone() * v.clone();
        let nv = self.c.clone() * u + self.d.clone() * v;
        PointCP1::from_location(nu, nv).expect("invertible maps send points to points")
    }

    pub fn to_c64(&self) -> MoebiusMap<C64> {
        MoebiusMap {
            a: self.a.to_c64(),
            b: self.b.to_c64(),
            c: self.c.to_c64(),
            d: self.d.to_c64(),
        }
    }
}

impl MoebiusMap<C64> {
    /// Same map scaled to determinant one.
    pub fn unimodular(&self) -> Self {
        let s = self.det().sqrt().inv();
        Self {
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
            d: self.d * s,
        }
    }
}

/// Applies `g` to a point; the orientation matches [`BinaryQuantic::transform`]
/// so that the roots of `q.transform(g)` are `g⁻¹` applied to the roots of `q`.
pub fn apply_moebius<T: Scalar>(p: &PointCP1<T>, g: &MoebiusMap<T>) -> PointCP1<T> {
    g.apply(p)
}

/// Multiset of points, each distinct, with positive multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootConfiguration<T: Scalar = C64> {
    points: Vec<(PointCP1<T>, usize)>,
}

impl<T: Scalar> RootConfiguration<T> {
    pub fn new(points: Vec<(PointCP1<T>, usize)>) -> Result<Self> {
        if points.iter().any(|(_, m)| *m == 0) {
            return Err(Error::ZeroMultiplicity);
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i].0.coincides(&points[j].0, COINCIDENCE_TOL) {
                    return Err(Error::CoincidentPoints(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    /// Builds a configuration from a list, merging coincident entries.
    pub fn from_points(list: &[PointCP1<T>]) -> Self {
        let mut points: Vec<(PointCP1<T>, usize)> = Vec::new();
        for p in list {
            match points
                .iter_mut()
                .find(|(q, _)| q.coincides(p, COINCIDENCE_TOL))
            {
                Some(entry) => entry.1 += 1,
                None => points.push((p.clone(), 1)),
            }
        }
        Self { points }
    }

    pub fn degree(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum()
    }

    pub fn points(&self) -> &[(PointCP1<T>, usize)] {
        &self.points
    }

    /// Every point repeated according to its multiplicity.
    pub fn expanded(&self) -> Vec<PointCP1<T>> {
        self.points
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p.clone(), *m))
            .collect()
    }

    /// Multiplicities sorted in decreasing order.
    pub fn pattern(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.points.iter().map(|(_, m)| *m).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    pub fn map(&self, g: &MoebiusMap<T>) -> Self {
        Self {
            points: self.points.iter().map(|(p, m)| (g.apply(p), *m)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn z(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn affine_chart_convention() {
        let p = PointCP1::affine(z(2.0, 1.0));
        assert_eq!(p.affine_coordinate(), Extended::Finite(z(2.0, 1.0)));
        assert_eq!(*p.alpha(), z(-2.0, -1.0));
        assert!(PointCP1::<C64>::infinity()
            .affine_coordinate()
            .is_infinite());
        // The linear form of x₀ is x − x₀ y.
        let f = PointCP1::affine(z(3.0, 0.0)).linear_form();
        assert_eq!(f.plain_coeffs(), vec![z(1.0, 0.0), z(-3.0, 0.0)]);
        assert!(matches!(
            PointCP1::new(z(0.0, 0.0), z(0.0, 0.0)),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn appendix_pairings() {
        // ⟨P_i, X⟩ = 1 and ⟨P_i, P_j⟩ = x_i − x_j with X the north pole.
        let xi = z(0.7, -0.2);
        let xj = z(-1.1, 0.4);
        let pi = PointCP1::affine(xi).linear_form();
        let pj = PointCP1::affine(xj).linear_form();
        let pole = PointCP1::<C64>::infinity().linear_form();
        let pair = |f: &BinaryQuantic, g: &BinaryQuantic| {
            f.coeffs()[0] * g.coeffs()[1] - f.coeffs()[1] * g.coeffs()[0]
        };
        assert_eq!(pair(&pi, &pole), z(1.0, 0.0));
        assert!((pair(&pi, &pj) - (xi - xj)).norm() < 1e-15);
    }

    #[test]
    fn infinity_to_zero() {
        let g = MoebiusMap::<C64>::swap();
        let image = g.apply(&PointCP1::infinity());
        assert_eq!(image.affine_coordinate(), Extended::Finite(z(0.0, 0.0)));
        let same = MoebiusMap::identity().apply(&PointCP1::affine(z(1.5, 2.0)));
        assert_eq!(same, PointCP1::affine(z(1.5, 2.0)));
    }

    #[test]
    fn singular_maps_are_rejected() {
        assert!(matches!(
            MoebiusMap::new(z(1.0, 0.0), z(2.0, 0.0), z(2.0, 0.0), z(4.0, 0.0)),
            Err(Error::SingularMap)
        ));
        let q = |n| GaussianRational::from_i64(n);
        assert!(MoebiusMap::new(q(1), q(2), q(2), q(4)).is_err());
        assert!(MoebiusMap::new(q(1), q(2), q(2), q(5)).is_ok());
    }

    #[test]
    fn compose_and_inverse() {
        let g = MoebiusMap::new(z(1.0, 1.0), z(2.0, 0.0), z(0.5, 0.0), z(-1.0, 3.0)).unwrap();
        let h = MoebiusMap::new(z(0.0, 1.0), z(1.0, 0.0), z(3.0, 0.0), z(1.0, -1.0)).unwrap();
        let p = PointCP1::affine(z(0.3, 0.9));
        let composed = g.compose(&h).apply(&p);
        let stepwise = g.apply(&h.apply(&p));
        assert!(composed.projective_distance(&stepwise) < 1e-14);
        let back = g.inverse().apply(&g.apply(&p));
        assert!(back.projective_distance(&p) < 1e-14);
        assert!((g.unimodular().det() - z(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn configurations_merge_and_validate() {
        let pts = [
            PointCP1::affine(z(1.0, 0.0)),
            PointCP1::affine(z(1.0, 0.0)),
            PointCP1::infinity(),
        ];
        let conf = RootConfiguration::from_points(&pts);
        assert_eq!(conf.degree(), 3);
        assert_eq!(conf.pattern(), vec![2, 1]);
        assert_eq!(conf.expanded().len(), 3);
        assert!(RootConfiguration::new(vec![
            (PointCP1::affine(z(1.0, 0.0)), 1),
            (PointCP1::affine(z(1.0 + 1e-12, 0.0)), 2),
        ])
        .is_err());
        assert!(RootConfiguration::new(vec![(PointCP1::<C64>::infinity(), 0)]).is_err());
    }
}
