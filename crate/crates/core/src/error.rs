use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has no entries")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("determinant deviates from 1 by {deviation:e}")]
    NotSpecialUnitary { deviation: f64 },
    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("matrix is not skew-Hermitian (residual {residual:e})")]
    NotSkewHermitian { residual: f64 },
    #[error("matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },
    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },
    #[error("spin count {n} outside {min}..={max}")]
    SpinCountOutOfRange { n: usize, min: usize, max: usize },
    #[error("invalid letter counts ({kx}, {ky}, {kz}) for {n} spins")]
    InvalidCounts {
        n: usize,
        kx: usize,
        ky: usize,
        kz: usize,
    },
    #[error("transposition index {j} outside 1..={max}")]
    TranspositionOutOfRange { j: usize, max: usize },
    #[error("excitation number {m} outside 0..={n}")]
    ExcitationOutOfRange { m: usize, n: usize },
    #[error("invalid Pauli label {0:?}")]
    InvalidLabel(char),
    #[error("invalid state description {0:?}")]
    InvalidState(String),
    #[error("state norm {norm} differs from 1")]
    NotNormalized { norm: f64 },
    #[error("amplitude count {len} does not match {n} spins")]
    AmplitudeCount { len: usize, n: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("commutator leaves the symmetric span (residual {residual:e})")]
    OutsideSymmetricSpan { residual: f64 },
    #[error("matrix is not block diagonal (off-block residual {residual:e})")]
    NotBlockDiagonal { residual: f64 },
    #[error("duplicated blocks differ (residual {residual:e})")]
    UnequalBlocks { residual: f64 },
    #[error("element lies outside the expected subgroup (residual {residual:e})")]
    OutsideSubgroup { residual: f64 },
    #[error("state leaves the symmetric subspace (weight {weight:e})")]
    NotPermutationInvariant { weight: f64 },
    #[error("synthesis supports 2 or 3 spins, got {0}")]
    UnsupportedSpinCount(usize),
    #[error("solver failed to converge: {0}")]
    NoConvergence(String),
    #[error("invalid amplitude {0}")]
    InvalidAmplitude(f64),
    #[error("invalid generator tag {0:?}")]
    InvalidTag(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
