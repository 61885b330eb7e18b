use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("unknown catalog function `{0}` (expected circle_cos:<n>, sphere_height or torus_height)")]
    UnknownCatalog(String),

    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),

    #[error("projection weights must be positive and finite, got {0}")]
    NonPositiveWeight(f64),

    #[error("product dimension {dim} exceeds the search cap of {max}")]
    DimensionCap { dim: usize, max: usize },

    #[error("chart index {index} out of range for `{name}` ({charts} charts)")]
    ChartIndex {
        name: String,
        index: usize,
        charts: usize,
    },

    #[error("point lies outside chart `{chart}` or closer than {margin} to its boundary")]
    OutsideChart { chart: String, margin: f64 },

    #[error("no Newton seed converged for `{name}`")]
    NoConvergence { name: String },

    #[error(
        "degenerate Hessian at a converged point of `{name}` (chart `{chart}`, \
         coordinates {coordinates:?}, eigenvalues {eigenvalues:?})"
    )]
    DegenerateHessian {
        name: String,
        chart: String,
        coordinates: Vec<f64>,
        eigenvalues: Vec<f64>,
    },

    #[error("index histogram {found:?} does not match the declared counts {declared:?} for `{name}`")]
    HistogramMismatch {
        name: String,
        found: Vec<i64>,
        declared: Vec<i64>,
    },
}

pub type Result<T> = std::result::Result<T, LabError>;
