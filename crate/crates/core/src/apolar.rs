//! X-points of a sextic, the tetrahedral characterisation of `𝓘 = 0`, the
//! fifth-point quadratic and maximally separated quintics.

use crate::error::{Error, Result};
use crate::invariants::{quadratic_invariant, transvectant_coeffs};
use crate::moebius::{MoebiusMap, PointCP1, RootConfiguration, COINCIDENCE_TOL};
use crate::poly;
use crate::quantic::BinaryQuantic;
use crate::roots::{from_roots, roots_of};
use crate::scalar::{binomial, sign, Scalar, C64};
use crate::sphere::{
    centroid_condition, classify_quartic, is_tetrahedral, pole_map, CrossRatioClass,
};

/// The quartic `δ = ⟨κ, ρ⟩₁` of a split `ψ = κρ` and its roots.
#[derive(Clone, Debug)]
pub struct XPointResult {
    pub quartic: BinaryQuantic<C64>,
    pub xpoints: RootConfiguration<C64>,
    /// Index of the root used as `ρ` among the roots of `ψ`.
    pub split: usize,
    pub split_root: PointCP1,
    /// The remaining five roots, the zeros of `κ`.
    pub others: Vec<PointCP1>,
}

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

/// Splits `ψ` at its root number `which` (in the order of
/// `roots_of(ψ).expanded()`) and returns the X-points of the split.
pub fn x_points(psi: &BinaryQuantic<C64>, which: usize, tol: f64) -> Result<XPointResult> {
    require_sextic(psi, "x_points")?;
    let roots = roots_of(psi, tol).expanded();
    x_points_with_roots(psi, &roots, which, tol)
}

fn x_points_with_roots(
    psi: &BinaryQuantic<C64>,
    roots: &[PointCP1],
    which: usize,
    tol: f64,
) -> Result<XPointResult> {
    let split_root = roots
        .get(which)
        .ok_or(Error::IndexOutOfRange {
            index: which,
            len: roots.len(),
        })?
        .clone();
    let rho = split_root.unit().linear_form();
    let factor = [rho.coeffs()[0], rho.coeffs()[1]];
    let kappa = poly::plain_to_binomial(&poly::divide_linear(&psi.plain_coeffs(), &factor));
    let delta = transvectant_coeffs(&kappa, rho.coeffs(), 1)?;
    let quartic = BinaryQuantic::new(delta)
        .map_err(|_| Error::InvalidParameters("ψ is a sixth power, so δ vanishes".into()))?
        .normalized();
    let xpoints = roots_of(&quartic, tol);
    let others = roots
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != which)
        .map(|(_, p)| p.clone())
        .collect();
    Ok(XPointResult {
        quartic,
        xpoints,
        split: which,
        split_root,
        others,
    })
}

/// One split of the Theorem-1 check.
#[derive(Clone, Debug)]
pub struct SplitRecord {
    pub result: XPointResult,
    pub class: CrossRatioClass,
    pub tetrahedral: bool,
    /// One entry per distinct X-point: whether the split root projects from
    /// it to the centroid of the other five, or `None` if the X-point is a
    /// root of `ψ` and the projection is undefined.
    pub centroid_checks: Vec<Option<bool>>,
}

/// Everything the Theorem-1 check computes for one sextic.
#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub invariant: C64,
    pub self_apolar: bool,
    /// Root multiplicities of `ψ`, largest first.
    pub root_pattern: Vec<usize>,
    pub splits: Vec<SplitRecord>,
}

impl Theorem1Report {
    /// `𝓘 ≈ 0` agrees with the tetrahedral class of `δ` for every split.
    pub fn consistent(&self) -> bool {
        self.splits
            .iter()
            .all(|s| s.tetrahedral == self.self_apolar)
    }

    /// Every defined centroid check passed.
    pub fn centroids_hold(&self) -> bool {
        self.splits
            .iter()
            .flat_map(|s| &s.centroid_checks)
            .all(|c| c.unwrap_or(true))
    }

    pub fn verified(&self) -> bool {
        self.consistent() && self.centroids_hold()
    }
}

/// Runs every split of a sextic and compares the vanishing of `𝓘` with the
/// class of each `δ`, checking the centroid property at every X-point.
pub fn verify_theorem1(psi: &BinaryQuantic<C64>, tol: f64) -> Result<Theorem1Report> {
    require_sextic(psi, "verify_theorem1")?;
    let config = roots_of(psi, tol);
    let roots = config.expanded();
    let invariant = quadratic_invariant(psi);
    let norm = psi.bombieri_norm();
    let self_apolar = invariant.is_negligible(norm * norm, tol);
    let mut splits = Vec::with_capacity(roots.len());
    for which in 0..roots.len() {
        let result = x_points_with_roots(psi, &roots, which, tol)?;
        let class = classify_quartic(&result.quartic, tol)?;
        let centroid_checks = result
            .xpoints
            .points()
            .iter()
            .map(|(x, _)| centroid_condition(&result.others, &result.split_root, x, tol).ok())
            .collect();
        splits.push(SplitRecord {
            tetrahedral: is_tetrahedral(&class),
            class,
            centroid_checks,
            result,
        });
    }
    Ok(Theorem1Report {
        invariant,
        self_apolar,
        root_pattern: config.pattern(),
        splits,
    })
}

/// The form in `X` whose zeros are the X-points for `2n − 1` points and a
/// last point `P`: the full pairing of `κ = Π points` with `P·X^{2n−2}`.
pub fn x_point_form<T: Scalar>(
    points: &[PointCP1<T>],
    last: &PointCP1<T>,
) -> Result<BinaryQuantic<T>> {
    let m = points.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "need 2n − 1 ≥ 3 points, got {m}"
        )));
    }
    let kappa = from_roots(&RootConfiguration::from_points(points))?;
    let n = m - 1;
    // a[i]: coefficient of x^{n−i} y^i in (t x − s y)^n, as a plain form in
    // (s, t); entry k multiplies s^{n−k} t^k.
    let a = |i: usize| -> Vec<T> {
        let mut v = vec![T::zero(); n + 1];
        v[n - i] = sign::<T>(i) * T::from_i64(binomial(n, i));
        v
    };
    let (beta, alpha) = (last.beta().clone(), last.alpha().clone());
    let chi: Vec<Vec<T>> = (0..=m)
        .map(|l| {
            let mut v = vec![T::zero(); n + 1];
            if l <= n {
                poly::add_assign(&mut v, &poly::scale(&a(l), &beta));
            }
            if l >= 1 {
                poly::add_assign(&mut v, &poly::scale(&a(l - 1), &alpha));
            }
            poly::scale(&v, &(T::one() / T::from_i64(binomial(m, l))))
        })
        .collect();
    let mut pairing = vec![T::zero(); n + 1];
    for j in 0..=m {
        let w = sign::<T>(j) * T::from_i64(binomial(m, j)) * kappa.coeffs()[j].clone();
        poly::add_assign(&mut pairing, &poly::scale(&chi[m - j], &w));
    }
    BinaryQuantic::from_plain(pairing)
        .map_err(|_| Error::InvalidParameters("the X-point form vanishes identically".into()))
}

/// Roots of [`x_point_form`].
pub fn x_points_general(
    points: &[PointCP1],
    last: &PointCP1,
    tol: f64,
) -> Result<RootConfiguration> {
    Ok(roots_of(&x_point_form(points, last)?, tol))
}

/// What the fifth-point quadratic allows.
#[derive(Clone, Debug, PartialEq)]
pub enum FifthPointSolutions {
    /// The finite `x₅` with `𝓘 = 0`, at most two.
    Points(Vec<C64>),
    /// `a = b = 0 ≠ c`: no finite fifth point makes the sextic self-apolar.
    AllValuesFail,
    /// `a = b = c = 0`: every fifth point does.
    AnyValue,
}

/// `𝓘 = a x₅² + 2b x₅ + c` for `ψ = y·Π(x − x_i y)·(x − x₅ y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FifthPointResult<T: Scalar = C64> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub solutions: FifthPointSolutions,
}

impl<T: Scalar> FifthPointResult<T> {
    pub fn evaluate(&self, x5: &T) -> T {
        self.a.clone() * x5.clone() * x5.clone()
            + T::from_i64(2) * self.b.clone() * x5.clone()
            + self.c.clone()
    }

    /// `a s² + 2b s t + c t²`, i.e. binomial coefficients `(a, b, c)`.
    pub fn quadratic(&self) -> Option<BinaryQuantic<T>> {
        BinaryQuantic::new(vec![self.a.clone(), self.b.clone(), self.c.clone()]).ok()
    }
}

/// `(a, b, c)` from the monic quartic `x⁴ + p₁x³ + p₂x² + p₃x + p₄` whose
/// roots are `x₁…x₄`, i.e. `p_k = (−1)^k e_k`.
fn coefficients_from_monic<T: Scalar>(p: &[T; 5]) -> (T, T, T) {
    let r = |n, d| T::from_ratio(n, d);
    let e1 = -p[1].clone();
    let e2 = p[2].clone();
    let e3 = -p[3].clone();
    let e4 = p[4].clone();
    let a = r(2, 15) * e2.clone() - r(1, 20) * e1.clone() * e1.clone();
    let b = r(-1, 10) * e3.clone() + r(1, 60) * e1.clone() * e2.clone();
    let c = r(-1, 3) * e4 + r(2, 15) * e1 * e3 - r(1, 20) * e2.clone() * e2;
    (a, b, c)
}

/// Scale of the centred roots, `max_k |ẽ_k|^{1/k}`, from a monic quartic.
fn centred_scale(p: &[C64; 5]) -> f64 {
    let mu = -p[1] / 4.0;
    // Taylor shift x → x + μ.
    let mut c = p.to_vec();
    for i in 0..4 {
        for j in 1..(5 - i) {
            c[j] = c[j] + mu * c[j - 1];
        }
    }
    (2..5)
        .map(|k| c[k].norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
}

fn solve<T: Scalar>(p: &[T; 5], tol: f64) -> Result<FifthPointResult<T>> {
    let (a, b, c) = coefficients_from_monic(p);
    let pc: [C64; 5] = std::array::from_fn(|i| p[i].to_c64());
    let scale = centred_scale(&pc);
    if scale == 0.0 {
        return Err(Error::RepeatedRoots);
    }
    let mu = -pc[1] / 4.0;
    let (af, bf, cf) = (a.to_c64(), b.to_c64(), c.to_c64());
    // Values for the centred configuration, where the weights 2, 3, 4 of
    // a, b, c make the comparison with `scale` meaningful.
    let bc = bf + af * mu;
    let cc = af * mu * mu + 2.0 * bf * mu + cf;
    let a_zero = if T::EXACT {
        a.is_zero()
    } else {
        af.norm() <= tol * scale.powi(2)
    };
    let b_zero = if T::EXACT {
        b.is_zero()
    } else {
        bc.norm() <= tol * scale.powi(3)
    };
    let c_zero = if T::EXACT {
        c.is_zero()
    } else {
        cc.norm() <= tol * scale.powi(4)
    };
    let solutions = match (a_zero, b_zero) {
        (true, true) if c_zero => FifthPointSolutions::AnyValue,
        (true, true) => FifthPointSolutions::AllValuesFail,
        (true, false) => FifthPointSolutions::Points(vec![-cf / (2.0 * bf)]),
        _ => {
            let sq = (bf * bf - af * cf).sqrt();
            let big = if (bf + sq).norm() >= (bf - sq).norm() {
                bf + sq
            } else {
                bf - sq
            };
            if big.norm() == 0.0 {
                FifthPointSolutions::Points(vec![C64::new(0.0, 0.0); 2])
            } else {
                FifthPointSolutions::Points(vec![-big / af, -cf / big])
            }
        }
    };
    Ok(FifthPointResult { a, b, c, solutions })
}

/// Fifth points completing `x₁…x₄` and `∞` to a self-apolar sextic.
pub fn fifth_point<T: Scalar>(xs: &[T; 4], tol: f64) -> Result<FifthPointResult<T>> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (p, q) = (
                PointCP1::affine(xs[i].clone()),
                PointCP1::affine(xs[j].clone()),
            );
            if p.coincides(&q, COINCIDENCE_TOL) {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    let mut p = vec![T::one()];
    for x in xs {
        p = poly::mul(&p, &[T::one(), -x.clone()]);
    }
    solve(&std::array::from_fn(|i| p[i].clone()), tol)
}

/// [`fifth_point`] with `x₁…x₄` given as the roots of a quartic, which keeps
/// the computation rational when the roots are not.
pub fn fifth_point_from_quartic<T: Scalar>(
    gamma: &BinaryQuantic<T>,
    tol: f64,
) -> Result<FifthPointResult<T>> {
    if gamma.degree() != 4 {
        return Err(Error::WrongDegree {
            operation: "fifth_point_from_quartic",
            expected: "4",
            got: gamma.degree(),
        });
    }
    let plain = gamma.plain_coeffs();
    if plain[0].is_negligible(gamma.bombieri_norm(), COINCIDENCE_TOL) {
        return Err(Error::InvalidParameters(
            "a root at ∞ coincides with the projection point".into(),
        ));
    }
    let p: [T; 5] = std::array::from_fn(|i| plain[i].clone() / plain[0].clone());
    if T::EXACT {
        let i = quadratic_invariant(gamma);
        let j = crate::sphere::quartic_cubic_invariant(gamma)?;
        if (i.clone() * i.clone() * i - T::from_i64(216) * j.clone() * j).is_zero() {
            return Err(Error::RepeatedRoots);
        }
    } else if roots_of(&gamma.to_c64(), tol).points().len() < 4 {
        return Err(Error::RepeatedRoots);
    }
    solve(&p, tol)
}

/// Outcome of the maximal-separation test.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxSeparation {
    pub separated: bool,
    /// Index of the point that plays the apex of the square pyramid.
    pub apex: Option<usize>,
    /// A Möbius map taking the five points onto `{±1, ±i, ∞}`.
    pub witness: Option<MoebiusMap<C64>>,
}

/// Whether no sixth point makes the sextic self-apolar. Each point is tried
/// as the projection pole; the configuration is maximally separated when the
/// other four give `a = b = 0`, which happens exactly at the apex of a
/// square pyramid.
pub fn is_maximally_separated(points: &[PointCP1], tol: f64) -> Result<MaxSeparation> {
    if points.len() != 5 {
        return Err(Error::InvalidParameters(format!(
            "need five points, got {}",
            points.len()
        )));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            if points[i].coincides(&points[j], COINCIDENCE_TOL) {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    for (apex, pole) in points.iter().enumerate() {
        let g = pole_map(pole);
        let xs: Vec<C64> = points
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != apex)
            .map(|(_, p)| {
                g.apply(p)
                    .affine_or_infinity(0.0)
                    .finite()
                    .expect("distinct from the pole")
            })
            .collect();
        let res = fifth_point(&[xs[0], xs[1], xs[2], xs[3]], tol)?;
        if res.solutions == FifthPointSolutions::AllValuesFail {
            let centre = xs.iter().sum::<C64>() / 4.0;
            let h = MoebiusMap::new(
                C64::new(1.0, 0.0),
                -centre,
                C64::new(0.0, 0.0),
                xs[0] - centre,
            )?;
            return Ok(MaxSeparation {
                separated: true,
                apex: Some(apex),
                witness: Some(h.compose(&g)),
            });
        }
    }
    Ok(MaxSeparation {
        separated: false,
        apex: None,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use crate::sphere::CrossRatioClass;
    use std::f64::consts::PI;

    const TOL: f64 = 1e-9;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn omega(k: usize) -> C64 {
        C64::from_polar(1.0, 2.0 * PI * k as f64 / 5.0)
    }

    fn pentagon_pyramid() -> BinaryQuantic {
        BinaryQuantic::from_real_plain(&[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0]).unwrap()
    }

    fn octahedron() -> BinaryQuantic {
        BinaryQuantic::from_real_plain(&[0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0]).unwrap()
    }

    fn root_index(psi: &BinaryQuantic, target: &PointCP1) -> usize {
        roots_of(psi, TOL)
            .expanded()
            .iter()
            .position(|p| p.coincides(target, 1e-8))
            .unwrap()
    }

    #[test]
    fn pentagon_split_at_infinity() {
        let psi = pentagon_pyramid();
        let r = x_points(&psi, root_index(&psi, &PointCP1::infinity()), TOL).unwrap();
        assert!(r
            .quartic
            .is_proportional_to(&BinaryQuantic::monomial(4, 0).unwrap(), 1e-12));
        assert_eq!(r.xpoints.points().len(), 1);
        assert_eq!(r.xpoints.points()[0].1, 4);
        assert!(r.xpoints.points()[0]
            .0
            .coincides(&PointCP1::affine(c(0.0, 0.0)), 1e-8));
    }

    #[test]
    fn pentagon_split_at_one() {
        let psi = pentagon_pyramid();
        let r = x_points(&psi, root_index(&psi, &PointCP1::affine(c(1.0, 0.0))), TOL).unwrap();
        let expected = BinaryQuantic::from_real_plain(&[1.0, 6.0, 6.0, 6.0, 6.0]).unwrap();
        assert!(r.quartic.is_proportional_to(&expected, 1e-10));
        assert_eq!(r.xpoints.points().len(), 4);
        assert_eq!(
            classify_quartic(&r.quartic, TOL).unwrap(),
            CrossRatioClass::Equianharmonic
        );
    }

    #[test]
    fn theorem_reports() {
        let report = verify_theorem1(&pentagon_pyramid(), TOL).unwrap();
        assert!(report.self_apolar && report.verified());
        assert_eq!(report.splits.len(), 6);
        let report = verify_theorem1(&octahedron(), TOL).unwrap();
        assert!((report.invariant - c(1.0 / 3.0, 0.0)).norm() < 1e-12);
        assert!(!report.self_apolar && report.verified());
        assert!(report.splits.iter().all(|s| !s.tetrahedral));
        assert!(x_points(&BinaryQuantic::monomial(4, 0).unwrap(), 0, TOL).is_err());
    }

    #[test]
    fn general_form_on_the_pentagon() {
        let pentagon: Vec<_> = (0..5).map(|k| PointCP1::affine(omega(k))).collect();
        let r = x_points_general(&pentagon, &PointCP1::infinity(), TOL).unwrap();
        assert_eq!(r.pattern(), vec![4]);
        assert!(r.points()[0]
            .0
            .coincides(&PointCP1::affine(c(0.0, 0.0)), 1e-8));
        let mut rest: Vec<_> = pentagon[1..].to_vec();
        rest.push(PointCP1::infinity());
        let f = x_point_form(&rest, &pentagon[0]).unwrap();
        let expected = BinaryQuantic::from_real_plain(&[1.0, 6.0, 6.0, 6.0, 6.0]).unwrap();
        assert!(f.is_proportional_to(&expected, 1e-10));
        assert!(x_point_form(&pentagon[..4], &PointCP1::infinity()).is_err());
    }

    #[test]
    fn pentagon_fifth_points() {
        let res = fifth_point(&[omega(1), omega(2), omega(3), omega(4)], TOL).unwrap();
        let FifthPointSolutions::Points(mut s) = res.solutions else {
            panic!("expected two solutions");
        };
        s.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((s[0] - c(-3.0, 0.0)).norm() < 1e-12);
        assert!((s[1] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn square_base_has_no_fifth_point() {
        let xs = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        let res = fifth_point(&xs, TOL).unwrap();
        assert_eq!(res.solutions, FifthPointSolutions::AllValuesFail);
        assert!((res.c - c(1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!(matches!(
            fifth_point(&[xs[0], xs[1], xs[0], xs[3]], TOL),
            Err(Error::CoincidentPoints(0, 2))
        ));
    }

    #[test]
    fn exact_quadratic_matches_the_invariant() {
        let g = |re: i64, im: i64| crate::scalar::gaussian((re, 1), (im, 1));
        let xs = [g(2, -1), g(-3, 0), g(0, 4), g(1, 1)];
        let res = fifth_point(&xs, TOL).unwrap();
        for x5 in [g(0, 0), g(5, -2), GaussianRational::from_ratio(7, 3)] {
            let mut psi = BinaryQuantic::new(vec![g(0, 0), g(1, 0)]).unwrap();
            for x in xs.iter().chain([&x5]) {
                psi = psi.mul(&PointCP1::affine(x.clone()).linear_form());
            }
            assert_eq!(quadratic_invariant(&psi), res.evaluate(&x5));
        }
    }

    #[test]
    fn exact_pentagon_quadratic() {
        let one = GaussianRational::from_i64(1);
        let gamma = BinaryQuantic::from_plain(vec![one.clone(); 5]).unwrap();
        let res = fifth_point_from_quartic(&gamma, TOL).unwrap();
        let twelfth = GaussianRational::from_ratio(1, 12);
        assert_eq!(res.a, twelfth);
        assert_eq!(res.b, twelfth);
        assert_eq!(res.c, GaussianRational::from_ratio(-1, 4));
    }

    #[test]
    fn square_pyramid_is_maximally_separated() {
        let pts = vec![
            PointCP1::affine(c(1.0, 0.0)),
            PointCP1::affine(c(0.0, 1.0)),
            PointCP1::affine(c(-1.0, 0.0)),
            PointCP1::affine(c(0.0, -1.0)),
            PointCP1::infinity(),
        ];
        let res = is_maximally_separated(&pts, TOL).unwrap();
        assert!(res.separated);
        assert_eq!(res.apex, Some(4));
        let w = res.witness.unwrap();
        for p in &pts {
            assert!(pts.iter().any(|q| w.apply(p).coincides(q, 1e-12)));
        }
        let pentagon: Vec<_> = (0..5).map(|k| PointCP1::affine(omega(k))).collect();
        assert!(!is_maximally_separated(&pentagon, TOL).unwrap().separated);
    }
}
