use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("factor {factor} has determinant {det} (expected 1 within {tol:e})")]
    NotUnimodular { factor: char, det: String, tol: f64 },

    /// The chart coordinate is too close to zero for implicit differentiation.
    #[error("chart singular: |x[{axis}]| = {value:e} <= {threshold:e}")]
    ChartSingular { axis: usize, value: f64, threshold: f64 },

    #[error("power {0} out of range (expected 1..=16)")]
    InvalidPower(u32),

    #[error("objective {0} has no known-maximizer catalog")]
    UnsupportedObjective(&'static str),

    #[error("empty input")]
    EmptyInput,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("adjoint block asset failed checksum: {0}")]
    Checksum(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
