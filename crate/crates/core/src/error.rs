use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero form is not a binary quantic")]
    ZeroForm,
    #[error("a quantic needs at least one coefficient")]
    NoCoefficients,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("{operation} requires {expected}, got degree {got}")]
    WrongDegree {
        operation: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("transvectant order {k} exceeds the smaller degree {max}")]
    OrderOutOfRange { k: usize, max: usize },
    #[error("the Möbius map is singular (ad - bc = 0)")]
    SingularMap,
    #[error("(0:0) is not a point of the projective line")]
    ZeroPoint,
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("root configuration is empty")]
    EmptyConfiguration,
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("index {index} out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("pole coincides with input point {0}")]
    PoleCoincides(usize),
    #[error("the quantic has repeated roots")]
    RepeatedRoots,
    #[error("no sum-of-powers decomposition: relative residual {residual:e}")]
    NotPowerSum { residual: f64 },
    #[error("characteristic polynomial has odd terms: {0}")]
    CharacteristicNormalization(String),
    #[error("three-form fails antisymmetry by {0:e}")]
    Antisymmetry(f64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("form degree {0} exceeds the dimension 7")]
    DegreeOverflow(usize),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by unreadable input rather than by mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Format(_) | Error::Json(_))
    }
}
