//! Random instances shared by the integration tests and the acceptance
//! suite. Every generator is seeded so failures reproduce.
#![allow(dead_code)]

use apolar::{roots_of, BinaryQuantic, MoebiusMap, PointCP1, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Independent oracle: `Σ (−1)^k C(m,k) ψ_k ψ_{m−k}` from plain coefficients,
/// written without the library's binomial helpers.
pub fn invariant_oracle(plain: &[C64]) -> C64 {
    let m = plain.len() - 1;
    let choose = |k: usize| (0..k).fold(1.0, |acc, i| acc * (m - i) as f64 / (i + 1) as f64);
    (0..=m).fold(c(0.0, 0.0), |acc, k| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc + plain[k] * plain[m - k] * sign / choose(k)
    })
}

/// `Π (x − z_i y)` as plain coefficients.
pub fn plain_from_affine_roots(zs: &[C64]) -> Vec<C64> {
    zs.iter().fold(vec![c(1.0, 0.0)], |acc, z| {
        let mut out = vec![c(0.0, 0.0); acc.len() + 1];
        for (k, a) in acc.iter().enumerate() {
            out[k] += a;
            out[k + 1] -= a * z;
        }
        out
    })
}

pub fn quantic_from_affine_roots(zs: &[C64]) -> BinaryQuantic {
    BinaryQuantic::from_plain(plain_from_affine_roots(zs)).unwrap()
}

/// Smallest chordal distance between roots; zero when a root repeats.
pub fn root_separation(q: &BinaryQuantic, tol: f64) -> f64 {
    let roots = roots_of(q, tol);
    if roots.points().len() < q.degree() {
        return 0.0;
    }
    let pts = roots.expanded();
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.min(pts[i].projective_distance(&pts[j]));
        }
    }
    best
}

/// Relative size of the quadratic invariant.
pub fn relative_invariant(q: &BinaryQuantic) -> f64 {
    apolar::quadratic_invariant(q).norm() / q.bombieri_norm().powi(2)
}

pub struct Gen(ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn real(&mut self, lo: f64, hi: f64) -> f64 {
        self.0.random_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.0.random_range(0..n)
    }

    /// Uniform in the square `[−r, r]²`.
    pub fn complex(&mut self, r: f64) -> C64 {
        c(self.real(-r, r), self.real(-r, r))
    }

    pub fn vector(&mut self, n: usize, r: f64) -> Vec<C64> {
        (0..n).map(|_| self.complex(r)).collect()
    }

    pub fn quantic(&mut self, degree: usize) -> BinaryQuantic {
        BinaryQuantic::new(self.vector(degree + 1, 1.0)).unwrap()
    }

    pub fn point(&mut self) -> PointCP1 {
        PointCP1::new(self.complex(1.0), self.complex(1.0)).unwrap()
    }

    /// `n` affine points in the disc-like square of radius 2, pairwise
    /// further apart than `sep`.
    pub fn separated_points(&mut self, n: usize, sep: f64) -> Vec<C64> {
        loop {
            let zs = self.vector(n, 2.0);
            let ok = (0..n).all(|i| ((i + 1)..n).all(|j| (zs[i] - zs[j]).norm() > sep));
            if ok {
                return zs;
            }
        }
    }

    /// A unimodular map with `‖g‖_F² ≤ 6`, so it distorts chordal distances
    /// by a bounded factor.
    pub fn moebius(&mut self) -> MoebiusMap {
        loop {
            let v = self.vector(4, 1.0);
            let Ok(g) = MoebiusMap::new(v[0], v[1], v[2], v[3]) else {
                continue;
            };
            if g.det().norm() < 0.05 {
                continue;
            }
            let g = g.unimodular();
            if [g.a, g.b, g.c, g.d]
                .iter()
                .map(|v| v.norm_sqr())
                .sum::<f64>()
                <= 6.0
            {
                return g;
            }
        }
    }

    /// A sextic with six well-separated roots, rescaled to unit norm.
    pub fn sextic_distinct(&mut self) -> BinaryQuantic {
        let q = quantic_from_affine_roots(&self.separated_points(6, 0.3));
        scale_to_unit(&q)
    }

    /// Generic sextic with distinct roots and `|𝓘| ≥ floor·‖ψ‖²`.
    pub fn generic_sextic(&mut self, floor: f64) -> BinaryQuantic {
        loop {
            let q = self.sextic_distinct();
            if relative_invariant(&q) >= floor {
                return q;
            }
        }
    }

    /// A form of even degree with `𝓘 = 0`: random outer coefficients and the
    /// middle one solved from the invariant.
    pub fn self_apolar(&mut self, degree: usize) -> BinaryQuantic {
        assert!(degree.is_multiple_of(2));
        let n = degree / 2;
        let mut coeffs = self.vector(degree + 1, 1.0);
        coeffs[n] = c(0.0, 0.0);
        let rest = apolar::quadratic_invariant(&BinaryQuantic::new(coeffs.clone()).unwrap());
        let middle = binomial(degree, n) * if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        coeffs[n] = (-rest / middle).sqrt();
        scale_to_unit(&BinaryQuantic::new(coeffs).unwrap())
    }

    /// Self-apolar form of even degree whose roots are separated by `sep`.
    pub fn self_apolar_distinct(&mut self, degree: usize, sep: f64) -> BinaryQuantic {
        loop {
            let q = self.self_apolar(degree);
            if root_separation(&q, 1e-9) > sep {
                return q;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub fn scale_to_unit(q: &BinaryQuantic) -> BinaryQuantic {
    q.scaled(&c(1.0 / q.bombieri_norm(), 0.0)).unwrap()
}

/// Largest chordal distance from each point of `a` to its nearest point
/// in `b`.
pub fn set_distance(a: &[PointCP1], b: &[PointCP1]) -> f64 {
    a.iter()
        .map(|p| {
            b.iter()
                .map(|q| p.projective_distance(q))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}
