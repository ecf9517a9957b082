pub mod apolar;
pub mod calibration;
pub mod canonical;
pub mod error;
pub mod figure;
pub mod g2;
pub mod invariants;
pub mod json;
pub mod moebius;
mod poly;
pub mod quantic;
pub mod roots;
pub mod scalar;
pub mod sphere;
pub mod spinor;

pub use apolar::{
    fifth_point, is_maximally_separated, verify_theorem1, x_points, x_points_general,
    FifthPointResult, FifthPointSolutions, MaxSeparation, Theorem1Report, XPointResult,
};
pub use canonical::{
    power_sum_decompose, self_apolar_sample, sylvester_to_sextic, PowerSumDecomposition,
    SylvesterParams,
};
pub use error::{Error, Result};
pub use invariants::{
    catalectant, characteristic_quartic, cubic_action_matrix, is_apolar, quadratic_invariant,
    transvectant, CharacteristicQuartic, Transvectant,
};
pub use moebius::{apply_moebius, Extended, MoebiusMap, PointCP1, RootConfiguration};
pub use quantic::BinaryQuantic;
pub use roots::{from_roots, roots_of};
pub use scalar::{GaussianRational, Scalar, C64, DEFAULT_TOL};
pub use sphere::{
    centroid_condition, classify_quartic, cross_ratio, is_regular_tetrahedron_class,
    normalize_three, project_from, CrossRatioClass,
};
pub use spinor::{
    contract, lower_all, raise_all, spinor_invariant, spinor_transvectant, SymmetricSpinor,
};
