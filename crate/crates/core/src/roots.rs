//! Passing between quantics and their roots on the sphere.
//!
//! Finite roots come from the eigenvalues of the companion matrix of the
//! dehomogenised polynomial, after the roots at `∞` have been split off.
//! Clusters of eigenvalues are merged into multiple roots when the
//! polynomial is within `tol` (backward error, coefficient-wise) of one
//! having a root of that multiplicity at the cluster mean.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::moebius::{PointCP1, RootConfiguration};
use crate::poly;
use crate::quantic::BinaryQuantic;
use crate::scalar::{binomial, Scalar, C64};

const NEWTON_STEPS: usize = 10;

/// The form `Π (β_i x + α_i y)^{m_i}`, scaled so that its largest-modulus
/// binomial coefficient is 1.
pub fn from_roots<T: Scalar>(roots: &RootConfiguration<T>) -> Result<BinaryQuantic<T>> {
    if roots.degree() == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let mut plain = vec![T::one()];
    for (p, m) in roots.points() {
        let factor = [p.beta().clone(), p.alpha().clone()];
        plain = poly::mul(&plain, &poly::power(&factor, *m));
    }
    Ok(BinaryQuantic::from_plain(plain)?.normalized())
}

/// All `m` roots of `q` with multiplicity, including `∞` when the leading
/// plain coefficients vanish relative to `tol · ‖q‖`.
pub fn roots_of(q: &BinaryQuantic<C64>, tol: f64) -> RootConfiguration<C64> {
    let plain = q.plain_coeffs();
    let norm = q.bombieri_norm();
    let at_infinity = plain.iter().take_while(|c| c.norm() <= tol * norm).count();
    let finite = &plain[at_infinity..];

    let mut points = Vec::new();
    for (root, mult) in finite_roots(finite, tol) {
        points.push((PointCP1::affine(root), mult));
    }
    if at_infinity > 0 {
        points.push((PointCP1::infinity(), at_infinity));
    }
    RootConfiguration::from_clusters(points)
}

impl RootConfiguration<C64> {
    /// Accepts root-finder output; clusters that ended up coincident are merged.
    fn from_clusters(points: Vec<(PointCP1<C64>, usize)>) -> Self {
        let mut merged: Vec<(PointCP1<C64>, usize)> = Vec::new();
        for (p, m) in points {
            match merged
                .iter_mut()
                .find(|(q, _)| q.coincides(&p, crate::moebius::COINCIDENCE_TOL))
            {
                Some(entry) => entry.1 += m,
                None => merged.push((p, m)),
            }
        }
        RootConfiguration::new(merged).expect("merged clusters are distinct")
    }
}

/// Roots of a univariate polynomial given leading coefficient first, with
/// multiplicities.
fn finite_roots(p: &[C64], tol: f64) -> Vec<(C64, usize)> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[0];
    let monic: Vec<C64> = p.iter().map(|c| c / lead).collect();
    let eigen = if n == 1 {
        vec![-monic[1]]
    } else {
        companion_eigenvalues(&monic)
    };
    cluster(&monic, eigen, tol)
}

fn companion_eigenvalues(monic: &[C64]) -> Vec<C64> {
    let n = monic.len() - 1;
    let mut m = DMatrix::<C64>::zeros(n, n);
    for j in 0..n {
        m[(0, j)] = -monic[j + 1];
    }
    for i in 1..n {
        m[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    match nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 10_000) {
        Some(schur) => {
            let (_, t) = schur.unpack();
            (0..n).map(|i| t[(i, i)]).collect()
        }
        None => aberth(monic),
    }
}

/// Aberth–Ehrlich iteration, used only if the QR iteration fails to converge.
fn aberth(monic: &[C64]) -> Vec<C64> {
    let n = monic.len() - 1;
    let dp = poly::derivative(monic);
    let radius = 1.0 + monic[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..n)
        .map(|k| C64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let ratio = poly::eval(monic, &z[i]) / poly::eval(&dp, &z[i]);
            let repulsion: C64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Taylor coefficient `p^{(j)}(c) / j!` together with its natural scale.
fn taylor(p: &[C64], c: C64, j: usize, coeff_max: f64) -> (C64, f64) {
    let n = p.len() - 1;
    let mut value = C64::new(0.0, 0.0);
    let mut scale = 0.0;
    // p = Σ a_i x^i with a_i = p[n - i]
    for i in j..=n {
        let b = binomial(i, j) as f64;
        value += p[n - i] * b * c.powu((i - j) as u32);
        scale += b * c.norm().powi((i - j) as i32);
    }
    (value, scale * coeff_max)
}

fn is_multiple_root(p: &[C64], c: C64, r: usize, tol: f64) -> bool {
    let coeff_max = p.iter().map(|v| v.norm()).fold(0.0, f64::max);
    (0..r).all(|j| {
        let (v, s) = taylor(p, c, j, coeff_max);
        v.norm() <= tol * s
    })
}

fn cluster(p: &[C64], mut z: Vec<C64>, tol: f64) -> Vec<(C64, usize)> {
    let mut out = Vec::new();
    while !z.is_empty() {
        let seed = z[0];
        let mut order: Vec<usize> = (0..z.len()).collect();
        order.sort_by(|&a, &b| (z[a] - seed).norm().total_cmp(&(z[b] - seed).norm()));
        let mut chosen = 1;
        let mut center = seed;
        for r in (2..=z.len()).rev() {
            let c = order[..r].iter().map(|&i| z[i]).sum::<C64>() / r as f64;
            if is_multiple_root(p, c, r, tol) {
                chosen = r;
                center = c;
                break;
            }
        }
        let refined = polish(p, center, chosen);
        out.push((refined, chosen));
        let mut taken: Vec<usize> = order[..chosen].to_vec();
        taken.sort_unstable_by(|a, b| b.cmp(a));
        for i in taken {
            z.swap_remove(i);
        }
    }
    out
}

/// Newton on `p^{(r-1)}`, for which an `r`-fold root is simple. Steps that do
/// not reduce the residual are rejected.
fn polish(p: &[C64], start: C64, r: usize) -> C64 {
    let mut f = p.to_vec();
    for _ in 1..r {
        f = poly::derivative(&f);
    }
    if f.len() < 2 {
        return start;
    }
    let df = poly::derivative(&f);
    let mut x = start;
    let mut residual = poly::eval(&f, &x).norm();
    for _ in 0..NEWTON_STEPS {
        if residual == 0.0 {
            break;
        }
        let step = poly::eval(&f, &x) / poly::eval(&df, &x);
        if !step.is_finite() {
            break;
        }
        let candidate = x - step;
        let r_new = poly::eval(&f, &candidate).norm();
        if r_new >= residual {
            break;
        }
        x = candidate;
        residual = r_new;
    }
    x
}
