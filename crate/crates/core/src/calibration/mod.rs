//! Exact constants relating identities whose two sides are computed by
//! different routes.
//!
//! The derivative transvectant carries factorials that the textbook forms of
//! these identities suppress. Each constant is derived by [`derive`] from exact
//! evaluations on pseudo-random Gaussian-integer inputs and stored in a
//! generated table; a unit test re-derives the table and compares it with the
//! checked-in source. Regenerate with
//! `cargo run -p apolar --example derive_calibration > crates/core/src/calibration/table.rs`.

pub mod derive;
mod table;

pub use table::*;

use crate::scalar::Scalar;

/// An exact rational `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub const fn new(num: i64, den: i64) -> Self {
        Self { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        T::from_ratio(self.num, self.den)
    }
}

fn lookup<K: PartialEq + Copy>(table: &[(K, Ratio)], key: K) -> Option<Ratio> {
    table.iter().find(|(k, _)| *k == key).map(|(_, r)| *r)
}

/// `⟨ψ, ψ⟩_{2n} / 𝓘(ψ)` for forms of even degree `2n ≤ 10`.
pub fn self_transvectant_scale(degree: usize) -> Option<Ratio> {
    lookup(SELF_TRANSVECTANT_SCALE, degree)
}

/// `ψ_{A…C}ψ^{A…C} / 𝓘(ψ)` for even valence `≤ 10`.
pub fn spinor_invariant_scale(valence: usize) -> Option<Ratio> {
    lookup(SPINOR_INVARIANT_SCALE, valence)
}

/// Derivative transvectant over ε-contraction transvectant, `m, n ≤ 6`.
pub fn spinor_transvectant_scale(m: usize, n: usize, k: usize) -> Option<Ratio> {
    lookup(SPINOR_TRANSVECTANT_SCALE, (m, n, k))
}

/// The constant `c > 0` with `𝓘(κρ) = −c·𝓘(⟨κ, ρ⟩₁)` for even `deg κρ` in `4..=10`.
pub fn split_scale(degree: usize) -> Option<Ratio> {
    lookup(SPLIT_SCALE, degree)
}
