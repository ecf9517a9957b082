// Generated by `cargo run -p apolar --example derive_calibration`; do not edit.

use super::Ratio;

/// `⟨ψ, ψ⟩_{2n} / 𝓘(ψ)` by degree.
pub const SELF_TRANSVECTANT_SCALE: &[(usize, Ratio)] = &[
    (2, Ratio::new(4, 1)),
    (4, Ratio::new(576, 1)),
    (6, Ratio::new(518400, 1)),
    (8, Ratio::new(1625702400, 1)),
    (10, Ratio::new(13168189440000, 1)),
];

/// `ψ_{A…C}ψ^{A…C} / 𝓘(ψ)` by valence.
pub const SPINOR_INVARIANT_SCALE: &[(usize, Ratio)] = &[
    (2, Ratio::new(1, 1)),
    (4, Ratio::new(1, 1)),
    (6, Ratio::new(1, 1)),
    (8, Ratio::new(1, 1)),
    (10, Ratio::new(1, 1)),
];

/// `c` in `𝓘(κρ) = −c·𝓘(⟨κ, ρ⟩₁)` by degree of `κρ`.
pub const SPLIT_SCALE: &[(usize, Ratio)] = &[
    (4, Ratio::new(1, 12)),
    (6, Ratio::new(1, 30)),
    (8, Ratio::new(1, 56)),
    (10, Ratio::new(1, 90)),
];

/// Derivative transvectant over ε-contraction, keyed by `(m, n, k)`.
pub const SPINOR_TRANSVECTANT_SCALE: &[((usize, usize, usize), Ratio)] = &[
    ((0, 0, 0), Ratio::new(1, 1)),
    ((0, 1, 0), Ratio::new(1, 1)),
    ((0, 2, 0), Ratio::new(1, 1)),
    ((0, 3, 0), Ratio::new(1, 1)),
    ((0, 4, 0), Ratio::new(1, 1)),
    ((0, 5, 0), Ratio::new(1, 1)),
    ((0, 6, 0), Ratio::new(1, 1)),
    ((1, 0, 0), Ratio::new(1, 1)),
    ((1, 1, 0), Ratio::new(1, 1)),
    ((1, 1, 1), Ratio::new(1, 1)),
    ((1, 2, 0), Ratio::new(1, 1)),
    ((1, 2, 1), Ratio::new(2, 1)),
    ((1, 3, 0), Ratio::new(1, 1)),
    ((1, 3, 1), Ratio::new(3, 1)),
    ((1, 4, 0), Ratio::new(1, 1)),
    ((1, 4, 1), Ratio::new(4, 1)),
    ((1, 5, 0), Ratio::new(1, 1)),
    ((1, 5, 1), Ratio::new(5, 1)),
    ((1, 6, 0), Ratio::new(1, 1)),
    ((1, 6, 1), Ratio::new(6, 1)),
    ((2, 0, 0), Ratio::new(1, 1)),
    ((2, 1, 0), Ratio::new(1, 1)),
    ((2, 1, 1), Ratio::new(2, 1)),
    ((2, 2, 0), Ratio::new(1, 1)),
    ((2, 2, 1), Ratio::new(4, 1)),
    ((2, 2, 2), Ratio::new(4, 1)),
    ((2, 3, 0), Ratio::new(1, 1)),
    ((2, 3, 1), Ratio::new(6, 1)),
    ((2, 3, 2), Ratio::new(12, 1)),
    ((2, 4, 0), Ratio::new(1, 1)),
    ((2, 4, 1), Ratio::new(8, 1)),
    ((2, 4, 2), Ratio::new(24, 1)),
    ((2, 5, 0), Ratio::new(1, 1)),
    ((2, 5, 1), Ratio::new(10, 1)),
    ((2, 5, 2), Ratio::new(40, 1)),
    ((2, 6, 0), Ratio::new(1, 1)),
    ((2, 6, 1), Ratio::new(12, 1)),
    ((2, 6, 2), Ratio::new(60, 1)),
    ((3, 0, 0), Ratio::new(1, 1)),
    ((3, 1, 0), Ratio::new(1, 1)),
    ((3, 1, 1), Ratio::new(3, 1)),
    ((3, 2, 0), Ratio::new(1, 1)),
    ((3, 2, 1), Ratio::new(6, 1)),
    ((3, 2, 2), Ratio::new(12, 1)),
    ((3, 3, 0), Ratio::new(1, 1)),
    ((3, 3, 1), Ratio::new(9, 1)),
    ((3, 3, 2), Ratio::new(36, 1)),
    ((3, 3, 3), Ratio::new(36, 1)),
    ((3, 4, 0), Ratio::new(1, 1)),
    ((3, 4, 1), Ratio::new(12, 1)),
    ((3, 4, 2), Ratio::new(72, 1)),
    ((3, 4, 3), Ratio::new(144, 1)),
    ((3, 5, 0), Ratio::new(1, 1)),
    ((3, 5, 1), Ratio::new(15, 1)),
    ((3, 5, 2), Ratio::new(120, 1)),
    ((3, 5, 3), Ratio::new(360, 1)),
    ((3, 6, 0), Ratio::new(1, 1)),
    ((3, 6, 1), Ratio::new(18, 1)),
    ((3, 6, 2), Ratio::new(180, 1)),
    ((3, 6, 3), Ratio::new(720, 1)),
    ((4, 0, 0), Ratio::new(1, 1)),
    ((4, 1, 0), Ratio::new(1, 1)),
    ((4, 1, 1), Ratio::new(4, 1)),
    ((4, 2, 0), Ratio::new(1, 1)),
    ((4, 2, 1), Ratio::new(8, 1)),
    ((4, 2, 2), Ratio::new(24, 1)),
    ((4, 3, 0), Ratio::new(1, 1)),
    ((4, 3, 1), Ratio::new(12, 1)),
    ((4, 3, 2), Ratio::new(72, 1)),
    ((4, 3, 3), Ratio::new(144, 1)),
    ((4, 4, 0), Ratio::new(1, 1)),
    ((4, 4, 1), Ratio::new(16, 1)),
    ((4, 4, 2), Ratio::new(144, 1)),
    ((4, 4, 3), Ratio::new(576, 1)),
    ((4, 4, 4), Ratio::new(576, 1)),
    ((4, 5, 0), Ratio::new(1, 1)),
    ((4, 5, 1), Ratio::new(20, 1)),
    ((4, 5, 2), Ratio::new(240, 1)),
    ((4, 5, 3), Ratio::new(1440, 1)),
    ((4, 5, 4), Ratio::new(2880, 1)),
    ((4, 6, 0), Ratio::new(1, 1)),
    ((4, 6, 1), Ratio::new(24, 1)),
    ((4, 6, 2), Ratio::new(360, 1)),
    ((4, 6, 3), Ratio::new(2880, 1)),
    ((4, 6, 4), Ratio::new(8640, 1)),
    ((5, 0, 0), Ratio::new(1, 1)),
    ((5, 1, 0), Ratio::new(1, 1)),
    ((5, 1, 1), Ratio::new(5, 1)),
    ((5, 2, 0), Ratio::new(1, 1)),
    ((5, 2, 1), Ratio::new(10, 1)),
    ((5, 2, 2), Ratio::new(40, 1)),
    ((5, 3, 0), Ratio::new(1, 1)),
    ((5, 3, 1), Ratio::new(15, 1)),
    ((5, 3, 2), Ratio::new(120, 1)),
    ((5, 3, 3), Ratio::new(360, 1)),
    ((5, 4, 0), Ratio::new(1, 1)),
    ((5, 4, 1), Ratio::new(20, 1)),
    ((5, 4, 2), Ratio::new(240, 1)),
    ((5, 4, 3), Ratio::new(1440, 1)),
    ((5, 4, 4), Ratio::new(2880, 1)),
    ((5, 5, 0), Ratio::new(1, 1)),
    ((5, 5, 1), Ratio::new(25, 1)),
    ((5, 5, 2), Ratio::new(400, 1)),
    ((5, 5, 3), Ratio::new(3600, 1)),
    ((5, 5, 4), Ratio::new(14400, 1)),
    ((5, 5, 5), Ratio::new(14400, 1)),
    ((5, 6, 0), Ratio::new(1, 1)),
    ((5, 6, 1), Ratio::new(30, 1)),
    ((5, 6, 2), Ratio::new(600, 1)),
    ((5, 6, 3), Ratio::new(7200, 1)),
    ((5, 6, 4), Ratio::new(43200, 1)),
    ((5, 6, 5), Ratio::new(86400, 1)),
    ((6, 0, 0), Ratio::new(1, 1)),
    ((6, 1, 0), Ratio::new(1, 1)),
    ((6, 1, 1), Ratio::new(6, 1)),
    ((6, 2, 0), Ratio::new(1, 1)),
    ((6, 2, 1), Ratio::new(12, 1)),
    ((6, 2, 2), Ratio::new(60, 1)),
    ((6, 3, 0), Ratio::new(1, 1)),
    ((6, 3, 1), Ratio::new(18, 1)),
    ((6, 3, 2), Ratio::new(180, 1)),
    ((6, 3, 3), Ratio::new(720, 1)),
    ((6, 4, 0), Ratio::new(1, 1)),
    ((6, 4, 1), Ratio::new(24, 1)),
    ((6, 4, 2), Ratio::new(360, 1)),
    ((6, 4, 3), Ratio::new(2880, 1)),
    ((6, 4, 4), Ratio::new(8640, 1)),
    ((6, 5, 0), Ratio::new(1, 1)),
    ((6, 5, 1), Ratio::new(30, 1)),
    ((6, 5, 2), Ratio::new(600, 1)),
    ((6, 5, 3), Ratio::new(7200, 1)),
    ((6, 5, 4), Ratio::new(43200, 1)),
    ((6, 5, 5), Ratio::new(86400, 1)),
    ((6, 6, 0), Ratio::new(1, 1)),
    ((6, 6, 1), Ratio::new(36, 1)),
    ((6, 6, 2), Ratio::new(900, 1)),
    ((6, 6, 3), Ratio::new(14400, 1)),
    ((6, 6, 4), Ratio::new(129600, 1)),
    ((6, 6, 5), Ratio::new(518400, 1)),
    ((6, 6, 6), Ratio::new(518400, 1)),
];

/// `λ²` coefficient of the cubic-action characteristic polynomial over `𝓘`.
pub const CUBIC_ACTION_SCALE: Ratio = Ratio::new(259200, 1);

/// Weight of `⟨⟨ψ,ψ⟩₄, ⟨ψ,ψ⟩₄⟩₄` in `𝓙`.
pub const CATALECTANT_FOURTH: Ratio = Ratio::new(1, 3224862720000);

/// Weight of `𝓘²` in `𝓙`.
pub const CATALECTANT_SQUARE: Ratio = Ratio::new(-1, 2);

/// `𝓘` of the Sylvester form over `2CA + 2CB + 2BA − 2`.
pub const SYLVESTER_SCALE: Ratio = Ratio::new(1, 1);

/// `(U⌟Ψ)∧(U⌟Ψ)∧Ψ / 𝓘(U)`.
pub const G2_SCALE: Ratio = Ratio::new(27, 1);
