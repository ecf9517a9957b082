//! The alternating three-form on sextics built from transvectants, and its
//! compatibility with the quadratic invariant.
//!
//! Sextics are vectors in the 7-dimensional space of binomial coefficient
//! lists. `Ψ(U, V, W)` is the full contraction `⟨⟨U, V⟩₃, W⟩₆` with both
//! transvectants normalised; it is the only `SL(2)`-invariant alternating
//! trilinear form on sextics up to scale.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::invariants::normalized_transvectant_coeffs;
use crate::scalar::{GaussianRational, Scalar, C64};

pub const DIM: usize = 7;
const TOP: usize = (1 << DIM) - 1;

/// Tolerance for the antisymmetry check of the assembled form.
pub const ANTISYMMETRY_TOL: f64 = 1e-12;

/// A `p`-form on the 7-dimensional space. Components are stored densely by
/// the bitmask of their sorted index set; only masks with `p` bits are used.
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingForm<T: Scalar = C64> {
    degree: usize,
    comps: Vec<T>,
}

fn permutation_sign(indices: &[usize]) -> Option<(usize, bool)> {
    let mut mask = 0usize;
    let mut odd = false;
    for (a, &i) in indices.iter().enumerate() {
        if i >= DIM || mask & (1 << i) != 0 {
            return None;
        }
        mask |= 1 << i;
        odd ^= indices[..a].iter().filter(|&&j| j > i).count() % 2 == 1;
    }
    Some((mask, odd))
}

/// Number of pairs `(i ∈ I, j ∈ J)` with `i > j`.
fn shuffle_inversions(i_mask: usize, j_mask: usize) -> u32 {
    (0..DIM)
        .filter(|j| j_mask & (1 << j) != 0)
        .map(|j| (i_mask >> (j + 1)).count_ones())
        .sum()
}

impl<T: Scalar> AlternatingForm<T> {
    pub fn zero(degree: usize) -> Result<Self> {
        if degree > DIM {
            return Err(Error::DegreeOverflow(degree));
        }
        Ok(Self {
            degree,
            comps: vec![T::zero(); 1 << DIM],
        })
    }

    /// The 0-form `value`.
    pub fn scalar(value: T) -> Self {
        let mut f = Self::zero(0).expect("degree 0");
        f.comps[0] = value;
        f
    }

    /// The 1-form with the given components.
    pub fn one_form(v: &[T]) -> Result<Self> {
        if v.len() != DIM {
            return Err(Error::CoefficientCount {
                expected: DIM,
                got: v.len(),
            });
        }
        let mut f = Self::zero(1)?;
        for (i, c) in v.iter().enumerate() {
            f.comps[1 << i] = c.clone();
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Component on `e_{i₁} ∧ … ∧ e_{i_p}` (0-based, any order).
    pub fn component(&self, indices: &[usize]) -> T {
        if indices.len() != self.degree {
            return T::zero();
        }
        match permutation_sign(indices) {
            Some((mask, odd)) => {
                let c = self.comps[mask].clone();
                if odd {
                    -c
                } else {
                    c
                }
            }
            None => T::zero(),
        }
    }

    /// Sorted index sets with their components.
    pub fn components(&self) -> impl Iterator<Item = (Vec<usize>, &T)> + '_ {
        (0..=TOP)
            .filter(move |m| m.count_ones() as usize == self.degree)
            .map(move |m| {
                (
                    (0..DIM).filter(|i| m & (1 << i) != 0).collect(),
                    &self.comps[m],
                )
            })
    }

    /// The single component of a 7-form.
    pub fn top_component(&self) -> T {
        if self.degree == DIM {
            self.comps[TOP].clone()
        } else {
            T::zero()
        }
    }

    pub fn scaled(&self, s: &T) -> Self {
        Self {
            degree: self.degree,
            comps: self.comps.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                operation: "AlternatingForm::add",
                expected: "equal degrees",
                got: other.degree,
            });
        }
        Ok(Self {
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    fn masks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=TOP)
            .filter(move |m| m.count_ones() as usize == self.degree && !self.comps[*m].is_zero())
    }
}

/// `f ∧ g` with the shuffle signs of the standard alternation.
pub fn wedge<T: Scalar>(
    f: &AlternatingForm<T>,
    g: &AlternatingForm<T>,
) -> Result<AlternatingForm<T>> {
    let mut out: AlternatingForm<T> = AlternatingForm::zero(f.degree + g.degree)?;
    for i in f.masks() {
        for j in g.masks() {
            if i & j != 0 {
                continue;
            }
            let term = f.comps[i].clone() * g.comps[j].clone();
            let slot = &mut out.comps[i | j];
            *slot = if shuffle_inversions(i, j) % 2 == 1 {
                slot.clone() - term
            } else {
                slot.clone() + term
            };
        }
    }
    Ok(out)
}

/// Interior product `U ⌟ f` into the first slot.
pub fn contract<T: Scalar>(u: &[T], f: &AlternatingForm<T>) -> Result<AlternatingForm<T>> {
    if u.len() != DIM {
        return Err(Error::CoefficientCount {
            expected: DIM,
            got: u.len(),
        });
    }
    if f.degree == 0 {
        return Err(Error::WrongDegree {
            operation: "contract",
            expected: "a form of degree at least 1",
            got: 0,
        });
    }
    let mut out: AlternatingForm<T> = AlternatingForm::zero(f.degree - 1)?;
    for mask in f.masks() {
        for (i, ui) in u.iter().enumerate() {
            if mask & (1 << i) == 0 || ui.is_zero() {
                continue;
            }
            let rest = mask & !(1 << i);
            let term = ui.clone() * f.comps[mask].clone();
            let slot = &mut out.comps[rest];
            *slot = if (rest & ((1 << i) - 1)).count_ones() % 2 == 1 {
                slot.clone() - term
            } else {
                slot.clone() + term
            };
        }
    }
    Ok(out)
}

fn require_sextic_vector<T>(v: &[T]) -> Result<()> {
    if v.len() != DIM {
        return Err(Error::CoefficientCount {
            expected: DIM,
            got: v.len(),
        });
    }
    Ok(())
}

/// `Ψ(U, V, W) = ⟨⟨U, V⟩₃, W⟩₆` on binomial coefficient vectors.
pub fn trilinear<T: Scalar>(u: &[T], v: &[T], w: &[T]) -> Result<T> {
    for x in [u, v, w] {
        require_sextic_vector(x)?;
    }
    let uv = normalized_transvectant_coeffs(u, v, 3)?;
    Ok(normalized_transvectant_coeffs(&uv, w, 6)?.remove(0))
}

fn basis<T: Scalar>(i: usize) -> Vec<T> {
    let mut e = vec![T::zero(); DIM];
    e[i] = T::one();
    e
}

/// Assembles `Ψ` from its values on basis triples after checking that the
/// trilinear map is alternating in every pair of slots.
pub fn build_psi<T: Scalar>() -> Result<AlternatingForm<T>> {
    let mut values = vec![T::zero(); DIM * DIM * DIM];
    let mut largest = 0.0f64;
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let v = trilinear(&basis::<T>(i), &basis(j), &basis(k))?;
                largest = largest.max(v.to_c64().norm());
                values[(i * DIM + j) * DIM + k] = v;
            }
        }
    }
    let at = |i: usize, j: usize, k: usize| values[(i * DIM + j) * DIM + k].clone();
    let mut worst = 0.0f64;
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let base = at(i, j, k);
                for other in [at(j, i, k), at(i, k, j), at(k, j, i)] {
                    worst = worst.max((base.to_c64() + other.to_c64()).norm());
                    if T::EXACT && !(base.clone() + other).is_zero() {
                        return Err(Error::Antisymmetry(f64::INFINITY));
                    }
                }
            }
        }
    }
    if worst > ANTISYMMETRY_TOL * largest {
        return Err(Error::Antisymmetry(worst / largest));
    }
    let mut form = AlternatingForm::zero(3)?;
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            for k in (j + 1)..DIM {
                form.comps[(1 << i) | (1 << j) | (1 << k)] = at(i, j, k);
            }
        }
    }
    Ok(form)
}

fn exact_psi() -> &'static AlternatingForm<GaussianRational> {
    static PSI: OnceLock<AlternatingForm<GaussianRational>> = OnceLock::new();
    PSI.get_or_init(|| build_psi().expect("the transvectant form is alternating"))
}

fn convert<T: Scalar>(v: &GaussianRational) -> T {
    let part = |r: &num_rational::BigRational| -> T {
        T::from_ratio(
            r.numer().to_i64().expect("small numerator"),
            r.denom().to_i64().expect("small denominator"),
        )
    };
    part(&v.re) + T::i() * part(&v.im)
}

/// `Ψ`, computed once in exact arithmetic.
pub fn psi<T: Scalar>() -> AlternatingForm<T> {
    let exact = exact_psi();
    AlternatingForm {
        degree: 3,
        comps: exact.comps.iter().map(convert).collect(),
    }
}

/// The single component of `(U⌟Ψ) ∧ (U⌟Ψ) ∧ Ψ`, quadratic in `U`.
pub fn compatibility_scalar<T: Scalar>(u: &[T]) -> Result<T> {
    require_sextic_vector(u)?;
    compatibility_with(&psi::<T>(), u)
}

fn compatibility_with<T: Scalar>(psi: &AlternatingForm<T>, u: &[T]) -> Result<T> {
    let a = contract(u, psi)?;
    Ok(wedge(&wedge(&a, &a)?, psi)?.top_component())
}
