use thiserror::Error;

/// Errors raised by descriptor operations with violated preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("orientation mismatch: one descriptor is oriented, the other is not")]
    OrientationMismatch,

    #[error("index {j} out of range for dimension {m} (expected 0 <= j <= {m})")]
    IndexOutOfRange { j: usize, m: usize },

    #[error("index {j} out of range for the product formula (expected 0 <= j < {m1})")]
    FormulaIndexOutOfRange { j: usize, m1: usize },

    #[error("the product formula requires the first dimension not to exceed the second ({m1} > {m2}); swap the arguments")]
    DimensionOrder { m1: usize, m2: usize },

    #[error("empty descriptor: no manifold to attach handles to")]
    EmptyDescriptor,

    #[error("dimension 0 admits no cancelling handle pair: a pair occupies indices j and j+1 <= m")]
    NoMiddlePair,

    #[error("missing Betti numbers: computing the invariant in oriented dimension {m} = 4k+1 needs sigma(M), the sum of the rational Betti numbers b_0..b_2k")]
    MissingBetti { m: usize },

    #[error("malformed descriptor JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
