//! Two-component spinor view of binary quantics.
//!
//! A symmetric spinor of valence `m` has only `m + 1` independent
//! components, one per count of `1` indices, and that is all we store.
//! Components are read as carrying lower indices, `ψ_k = ψ_{1…10…0}` with
//! `k` ones, so a spinor and a quantic share the same numbers. Indices move
//! with `ε_{01} = ε^{01} = 1`; every contraction below is a sum over index
//! patterns weighted by how many tensor entries share that pattern.

use crate::error::{Error, Result};
use crate::quantic::BinaryQuantic;
use crate::scalar::{binomial, sign, Scalar, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricSpinor<T: Scalar = C64> {
    components: Vec<T>,
}

impl<T: Scalar> SymmetricSpinor<T> {
    pub fn new(components: Vec<T>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::NoCoefficients);
        }
        Ok(Self { components })
    }

    pub fn from_quantic(q: &BinaryQuantic<T>) -> Self {
        Self {
            components: q.coeffs().to_vec(),
        }
    }

    pub fn to_quantic(&self) -> Result<BinaryQuantic<T>> {
        BinaryQuantic::new(self.components.clone())
    }

    /// `(ψ_0, ψ_1)` for a valence-one spinor.
    pub fn valence_one(c0: T, c1: T) -> Self {
        Self {
            components: vec![c0, c1],
        }
    }

    pub fn valence(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    /// `α_(A β_B … γ_C)` for valence-one factors.
    pub fn symmetrized_product(factors: &[Self]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NoCoefficients);
        }
        if let Some(f) = factors.iter().find(|f| f.valence() != 1) {
            return Err(Error::WrongDegree {
                operation: "symmetrized_product",
                expected: "valence-one factors",
                got: f.valence(),
            });
        }
        // sums[k] = Σ over k-subsets S of Π_{i∈S} f_i1 Π_{i∉S} f_i0
        let mut sums = vec![T::one()];
        for f in factors {
            let mut next = vec![T::zero(); sums.len() + 1];
            for (k, s) in sums.iter().enumerate() {
                next[k] = next[k].clone() + s.clone() * f.components[0].clone();
                next[k + 1] = next[k + 1].clone() + s.clone() * f.components[1].clone();
            }
            sums = next;
        }
        let m = factors.len();
        let components = sums
            .into_iter()
            .enumerate()
            .map(|(k, s)| s / T::from_i64(binomial(m, k)))
            .collect();
        Ok(Self { components })
    }

    /// Symmetrises a tensor that is already symmetric within two groups of
    /// `p` and `q` indices; `table[a][b]` is the entry with `a` ones in the
    /// first group and `b` ones in the second.
    pub fn symmetrize_split(table: &[Vec<T>]) -> Result<Self> {
        let p = table.len().checked_sub(1).ok_or(Error::NoCoefficients)?;
        let q = table[0].len().checked_sub(1).ok_or(Error::NoCoefficients)?;
        if table.iter().any(|row| row.len() != q + 1) {
            return Err(Error::Format("ragged index table".into()));
        }
        let total = p + q;
        let components = (0..=total)
            .map(|s| {
                let mut acc = T::zero();
                for a in s.saturating_sub(q)..=s.min(p) {
                    let weight = binomial(p, a) * binomial(q, s - a);
                    acc = acc + table[a][s - a].clone() * T::from_i64(weight);
                }
                acc / T::from_i64(binomial(total, s))
            })
            .collect();
        Ok(Self { components })
    }
}

/// `ψ_{A…C} = ψ^{P…R} ε_{PA} … ε_{RC}`: the input is read with upper indices.
pub fn lower_all<T: Scalar>(s: &SymmetricSpinor<T>) -> SymmetricSpinor<T> {
    let m = s.valence();
    SymmetricSpinor {
        components: (0..=m)
            .map(|k| sign::<T>(m - k) * s.components[m - k].clone())
            .collect(),
    }
}

/// Inverse of [`lower_all`].
pub fn raise_all<T: Scalar>(s: &SymmetricSpinor<T>) -> SymmetricSpinor<T> {
    let m = s.valence();
    SymmetricSpinor {
        components: (0..=m)
            .map(|k| sign::<T>(k) * s.components[m - k].clone())
            .collect(),
    }
}

/// Full contraction `ψ_{A…C} φ^{A…C}` of a lower spinor with an upper one.
pub fn contract<T: Scalar>(lower: &SymmetricSpinor<T>, upper: &SymmetricSpinor<T>) -> Result<T> {
    if lower.valence() != upper.valence() {
        return Err(Error::WrongDegree {
            operation: "contract",
            expected: "equal valences",
            got: upper.valence(),
        });
    }
    let m = lower.valence();
    Ok((0..=m).fold(T::zero(), |acc, k| {
        acc + T::from_i64(binomial(m, k))
            * lower.components[k].clone()
            * upper.components[k].clone()
    }))
}

/// `ψ_{A…C} ψ^{A…C}`; zero for odd valence.
pub fn spinor_invariant<T: Scalar>(s: &SymmetricSpinor<T>) -> T {
    if s.valence() % 2 == 1 {
        return T::zero();
    }
    contract(s, &raise_all(s)).expect("same valence")
}

/// `ε^{A₁B₁} … ε^{A_kB_k} ψ_{A₁…A_k…} φ_{B₁…B_k…}`, symmetrised over the
/// free indices.
pub fn spinor_transvectant<T: Scalar>(
    s: &SymmetricSpinor<T>,
    t: &SymmetricSpinor<T>,
    k: usize,
) -> Result<SymmetricSpinor<T>> {
    let (m, n) = (s.valence(), t.valence());
    if k > m.min(n) {
        return Err(Error::OrderOutOfRange { k, max: m.min(n) });
    }
    let (p, q) = (m - k, n - k);
    // j pairs carry (A, B) = (1, 0) with ε^{10} = −1; the rest are (0, 1).
    let table: Vec<Vec<T>> = (0..=p)
        .map(|a| {
            (0..=q)
                .map(|b| {
                    (0..=k).fold(T::zero(), |acc, j| {
                        acc + sign::<T>(j)
                            * T::from_i64(binomial(k, j))
                            * s.components[j + a].clone()
                            * t.components[k - j + b].clone()
                    })
                })
                .collect()
        })
        .collect();
    SymmetricSpinor::symmetrize_split(&table)
}
