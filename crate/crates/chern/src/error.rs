//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition {parts:?} is not weakly decreasing positive")]
    BadPartition { parts: Vec<u32> },

    #[error("partition weight {weight} does not match dimension {dim}")]
    WeightMismatch { weight: usize, dim: usize },

    #[error("dimension mismatch: polynomial has dim {poly_dim}, manifold has dim {manifold_dim}")]
    DimensionMismatch { poly_dim: usize, manifold_dim: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("series division by non-invertible denominator (constant term must be a nonzero rational)")]
    NonInvertibleSeries,

    #[error("proportionality factor must be nonzero (it is the Todd genus of the quotient)")]
    ZeroToddFactor,

    #[error("manifold is missing Chern data: {0}")]
    MissingChernData(String),

    #[error("not a valid rational (expected \"p\" or \"p/q\"): {0}")]
    BadRational(String),

    #[error("bad descriptor: {0}")]
    BadDescriptor(String),

    #[error("{0}")]
    Usage(String),

    #[error("hodge grid does not reproduce the Chern-number genus: chi_y from hodge = {from_hodge}, from Chern numbers = {from_chern}")]
    HodgeChernMismatch { from_hodge: String, from_chern: String },

    #[error("the Yau inequality needs dimension >= 2, got {0}")]
    YauUndefined(usize),

    #[error("odd coefficient K_{j} (dim {n}) is not in the span of the even ones")]
    OddDependenceFalsified { n: usize, j: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
