//! Exact derivation of every constant in the calibration table.
//!
//! Each constant is a ratio of two exactly computed quantities. It is taken
//! from one pseudo-random Gaussian-integer input and confirmed on several
//! more; a mismatch means the two sides are not proportional and is an error.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::Ratio;
use crate::canonical::{sylvester_to_sextic, SylvesterParams};
use crate::g2::compatibility_scalar;
use crate::invariants::{
    catalectant::{characteristic_polynomial, cubic_action_matrix},
    quadratic_invariant, transvectant_coeffs,
};
use crate::quantic::BinaryQuantic;
use crate::scalar::{GaussianRational, Scalar};
use crate::spinor::{spinor_invariant, spinor_transvectant, SymmetricSpinor};

const CONFIRMATIONS: usize = 5;
const MAX_ATTEMPTS: usize = 200;

/// Largest valence or degree covered by the per-degree tables.
pub const MAX_DEGREE: usize = 10;
/// Largest valence covered by the spinor transvectant table.
pub const MAX_SPINOR_VALENCE: usize = 6;

/// Splitmix64; deterministic so the generated table is reproducible.
struct Sampler(u64);

impl Sampler {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn int(&mut self) -> i64 {
        (self.next() % 19) as i64 - 9
    }

    fn gaussian(&mut self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.int().into()),
            BigRational::from_integer(self.int().into()),
        )
    }

    fn coeffs(&mut self, len: usize) -> Vec<GaussianRational> {
        (0..len).map(|_| self.gaussian()).collect()
    }

    fn form(&mut self, degree: usize) -> BinaryQuantic<GaussianRational> {
        loop {
            if let Ok(q) = BinaryQuantic::new(self.coeffs(degree + 1)) {
                return q;
            }
        }
    }
}

fn to_ratio(v: &GaussianRational) -> Result<Ratio, String> {
    if !v.im.is_zero() {
        return Err(format!("non-real constant {v}"));
    }
    let num = v.re.numer().to_i64();
    let den = v.re.denom().to_i64();
    match (num, den) {
        (Some(num), Some(den)) => Ok(Ratio::new(num, den)),
        _ => Err(format!("constant {} does not fit in i64", v.re)),
    }
}

/// The common value of `lhs / rhs` over samples with `rhs ≠ 0`.
fn constant_ratio<F>(seed: u64, mut sample: F) -> Result<Ratio, String>
where
    F: FnMut(&mut Sampler) -> (GaussianRational, GaussianRational),
{
    let mut rng = Sampler(seed);
    let mut found: Option<GaussianRational> = None;
    let mut confirmed = 0;
    for _ in 0..MAX_ATTEMPTS {
        let (lhs, rhs) = sample(&mut rng);
        if rhs.is_zero() {
            if !lhs.is_zero() {
                return Err("left side nonzero where right side vanishes".into());
            }
            continue;
        }
        let r = lhs / rhs;
        match &found {
            None => found = Some(r),
            Some(f) if *f == r => {
                confirmed += 1;
                if confirmed == CONFIRMATIONS {
                    return to_ratio(f);
                }
            }
            Some(f) => return Err(format!("ratio not constant: {f} vs {r}")),
        }
    }
    Err("too few samples with a nonzero right side".into())
}

/// `⟨ψ, ψ⟩_{2n} / 𝓘(ψ)`.
pub fn self_transvectant_scale(degree: usize) -> Result<Ratio, String> {
    constant_ratio(degree as u64, |rng| {
        let c = rng.coeffs(degree + 1);
        let t = transvectant_coeffs(&c, &c, degree).expect("order in range");
        let q = BinaryQuantic::new(c).map(|q| quadratic_invariant(&q));
        (t[0].clone(), q.unwrap_or_else(|_| GaussianRational::zero()))
    })
}

/// `ψ_{A…C}ψ^{A…C} / 𝓘(ψ)`.
pub fn spinor_invariant_scale(valence: usize) -> Result<Ratio, String> {
    constant_ratio(100 + valence as u64, |rng| {
        let q = rng.form(valence);
        (
            spinor_invariant(&SymmetricSpinor::from_quantic(&q)),
            quadratic_invariant(&q),
        )
    })
}

/// Derivative transvectant over the ε-contraction, compared coefficientwise.
pub fn spinor_transvectant_scale(m: usize, n: usize, k: usize) -> Result<Ratio, String> {
    let mut index = 0usize;
    let out_len = m + n - 2 * k + 1;
    constant_ratio(1000 + (m * 100 + n * 10 + k) as u64, |rng| {
        let a = rng.form(m);
        let b = rng.form(n);
        let d = transvectant_coeffs(a.coeffs(), b.coeffs(), k).expect("order in range");
        let s = spinor_transvectant(
            &SymmetricSpinor::from_quantic(&a),
            &SymmetricSpinor::from_quantic(&b),
            k,
        )
        .expect("order in range");
        // Cycle through output positions so each coefficient is compared.
        let i = index % out_len;
        index += 1;
        (d[i].clone(), s.components()[i].clone())
    })
}

/// `c` with `𝓘(κρ) = −c·𝓘(⟨κ, ρ⟩₁)`.
pub fn split_scale(degree: usize) -> Result<Ratio, String> {
    constant_ratio(2000 + degree as u64, |rng| {
        let kappa = rng.form(degree - 1);
        let rho = rng.form(1);
        let delta = transvectant_coeffs(kappa.coeffs(), rho.coeffs(), 1).expect("order 1");
        let lhs = quadratic_invariant(&kappa.mul(&rho));
        let rhs = -BinaryQuantic::new(delta)
            .map(|d| quadratic_invariant(&d))
            .unwrap_or_else(|_| GaussianRational::zero());
        (lhs, rhs)
    })
}

/// `λ²` coefficient of `det(λ − A)` over `𝓘(ψ)` for the cubic action `A`.
pub fn cubic_action_scale() -> Result<Ratio, String> {
    constant_ratio(3000, |rng| {
        let psi = rng.form(6);
        let c = characteristic_polynomial(&cubic_action_matrix(&psi).expect("sextic"));
        (c[2].clone(), quadratic_invariant(&psi))
    })
}

/// `(α, β)` with `−2c₀/κ² = α·⟨⟨ψ,ψ⟩₄,⟨ψ,ψ⟩₄⟩₄ + β·𝓘²`, where `c₀` is the
/// constant coefficient of the cubic-action characteristic polynomial.
pub fn catalectant_constants() -> Result<(Ratio, Ratio), String> {
    let kappa = cubic_action_scale()?.to_scalar::<GaussianRational>();
    let mut rng = Sampler(4000);
    let mut sample = || {
        let psi = rng.form(6);
        let c = characteristic_polynomial(&cubic_action_matrix(&psi).expect("sextic"));
        let j = -GaussianRational::from_i64(2) * c[4].clone() / (kappa.clone() * kappa.clone());
        let h = transvectant_coeffs(psi.coeffs(), psi.coeffs(), 4).expect("order 4");
        let t = transvectant_coeffs(&h, &h, 4).expect("order 4")[0].clone();
        let i = quadratic_invariant(&psi);
        (j, t, i.clone() * i)
    };
    for _ in 0..MAX_ATTEMPTS {
        let (j1, t1, s1) = sample();
        let (j2, t2, s2) = sample();
        let det = t1.clone() * s2.clone() - t2.clone() * s1.clone();
        if det.is_zero() {
            continue;
        }
        let alpha = (j1.clone() * s2 - j2.clone() * s1) / det.clone();
        let beta = (t1 * j2 - t2 * j1) / det;
        for _ in 0..CONFIRMATIONS {
            let (j, t, s) = sample();
            if j != alpha.clone() * t + beta.clone() * s {
                return Err("catalectant is not a combination of the two invariants".into());
            }
        }
        return Ok((to_ratio(&alpha)?, to_ratio(&beta)?));
    }
    Err("degenerate samples".into())
}

/// `𝓘(sylvester_to_sextic(A, B, C)) / (2CA + 2CB + 2BA − 2)`.
pub fn sylvester_scale() -> Result<Ratio, String> {
    constant_ratio(5000, |rng| {
        let p = SylvesterParams::new(rng.gaussian(), rng.gaussian(), rng.gaussian());
        let psi = sylvester_to_sextic(&p).expect("nonzero form");
        (quadratic_invariant(&psi), p.invariant_expression())
    })
}

/// `(U⌟Ψ)∧(U⌟Ψ)∧Ψ / 𝓘(U)`.
pub fn g2_scale() -> Result<Ratio, String> {
    constant_ratio(6000, |rng| {
        let u = rng.form(6);
        (
            compatibility_scalar(u.coeffs()).expect("sextic"),
            quadratic_invariant(&u),
        )
    })
}

fn ratio_source(r: Ratio) -> String {
    format!("Ratio::new({}, {})", r.num, r.den)
}

/// Source text of `table.rs`.
pub fn render_table() -> Result<String, String> {
    let mut out = String::new();
    out.push_str(
        "// Generated by `cargo run -p apolar --example derive_calibration`; do not edit.\n\n\
         use super::Ratio;\n\n",
    );
    let per_degree =
        |name: &str, doc: &str, degrees: Vec<usize>, f: &dyn Fn(usize) -> Result<Ratio, String>| {
            let mut s = format!("/// {doc}\npub const {name}: &[(usize, Ratio)] = &[\n");
            for d in degrees {
                s.push_str(&format!("    ({d}, {}),\n", ratio_source(f(d)?)));
            }
            s.push_str("];\n\n");
            Ok::<String, String>(s)
        };
    let even: Vec<usize> = (1..=MAX_DEGREE / 2).map(|n| 2 * n).collect();
    out.push_str(&per_degree(
        "SELF_TRANSVECTANT_SCALE",
        "`⟨ψ, ψ⟩_{2n} / 𝓘(ψ)` by degree.",
        even.clone(),
        &self_transvectant_scale,
    )?);
    out.push_str(&per_degree(
        "SPINOR_INVARIANT_SCALE",
        "`ψ_{A…C}ψ^{A…C} / 𝓘(ψ)` by valence.",
        even.clone(),
        &spinor_invariant_scale,
    )?);
    out.push_str(&per_degree(
        "SPLIT_SCALE",
        "`c` in `𝓘(κρ) = −c·𝓘(⟨κ, ρ⟩₁)` by degree of `κρ`.",
        even[1..].to_vec(),
        &split_scale,
    )?);
    out.push_str(
        "/// Derivative transvectant over ε-contraction, keyed by `(m, n, k)`.\n\
         pub const SPINOR_TRANSVECTANT_SCALE: &[((usize, usize, usize), Ratio)] = &[\n",
    );
    for m in 0..=MAX_SPINOR_VALENCE {
        for n in 0..=MAX_SPINOR_VALENCE {
            for k in 0..=m.min(n) {
                let r = spinor_transvectant_scale(m, n, k)?;
                out.push_str(&format!("    (({m}, {n}, {k}), {}),\n", ratio_source(r)));
            }
        }
    }
    out.push_str("];\n\n");
    let (fourth, square) = catalectant_constants()?;
    let scalars = [
        (
            "CUBIC_ACTION_SCALE",
            "`λ²` coefficient of the cubic-action characteristic polynomial over `𝓘`.",
            cubic_action_scale()?,
        ),
        (
            "CATALECTANT_FOURTH",
            "Weight of `⟨⟨ψ,ψ⟩₄, ⟨ψ,ψ⟩₄⟩₄` in `𝓙`.",
            fourth,
        ),
        ("CATALECTANT_SQUARE", "Weight of `𝓘²` in `𝓙`.", square),
        (
            "SYLVESTER_SCALE",
            "`𝓘` of the Sylvester form over `2CA + 2CB + 2BA − 2`.",
            sylvester_scale()?,
        ),
        ("G2_SCALE", "`(U⌟Ψ)∧(U⌟Ψ)∧Ψ / 𝓘(U)`.", g2_scale()?),
    ];
    for (i, (name, doc, r)) in scalars.iter().enumerate() {
        out.push_str(&format!(
            "/// {doc}\npub const {name}: Ratio = {};\n",
            ratio_source(*r)
        ));
        if i + 1 < scalars.len() {
            out.push('\n');
        }
    }
    Ok(out)
}
