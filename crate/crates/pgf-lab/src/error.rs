//! Error types shared across the library.

use thiserror::Error;

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),

    #[error("coordinate vector has length {got}, surface has {want} edges")]
    CoordLength { got: usize, want: usize },

    #[error("triangle {triangle} violates the matching conditions: {reason}")]
    Matching { triangle: usize, reason: String },

    #[error("multicurve contains an inessential component: {0}")]
    Inessential(String),

    #[error("multicurve has a component with multiplicity {0} > 1 where a multiplicity-free multicurve is required")]
    Multiplicity(u64),

    #[error("curves live on different surfaces (genus {0} vs {1})")]
    SurfaceMismatch(u32, u32),

    #[error("operation exceeded its budget: {0}")]
    Budget(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("constants profile rejected: {0}")]
    Profile(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
