//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the perception primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// Pitch or roll outside the supported `[-pi/2, pi/2]` range.
    #[error("imu attitude out of range: |pitch| and |roll| must be <= pi/2")]
    AttitudeOutOfRange,
    /// An operation that needs points received an empty cloud.
    #[error("operation requires a non-empty point cloud")]
    EmptyCloud,
    /// The filtering stages removed every point of the input cloud.
    #[error("all points were removed by the filtering stages")]
    AllPointsFiltered,
    /// The point set is coincident or collinear; no unique plane exists.
    #[error("degenerate geometry: points do not span a unique plane")]
    DegenerateGeometry,
    /// Two buffers that must share dimensions do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    /// Collage masks overlap or leave uncovered pixels.
    #[error("masks do not form an exact partition of the image")]
    PartitionViolation,
    /// The texture bank cannot supply the requested triple.
    #[error("insufficient texture bank: {0}")]
    InsufficientBank(&'static str),
    /// Tensor operands have incompatible shapes.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    /// Model weights disagree with the model configuration.
    #[error("weight shape mismatch: {0}")]
    WeightShapeMismatch(&'static str),
    /// Channel count is not divisible by the local-grouping group count.
    #[error("channel count not divisible by group count")]
    GroupDivisibility,
    /// Paired sequences (labels vs. points) differ in length.
    #[error("sequence length mismatch")]
    LengthMismatch,
    /// A parameter violates its documented invariant.
    #[error("invalid parameter: {0}")]
    InvalidParam(&'static str),
}

pub type Result<T> = core::result::Result<T, CoreError>;
