//! Numerical verification of index additivity for product functions.
//!
//! Closed-form functions on explicit manifolds are described by coordinate
//! charts. Critical points are found by grid-seeded Newton iteration on
//! finite-difference gradients and classified by the eigenvalue signs of
//! finite-difference Hessians. For a positively weighted product
//! a*f1 + b*f2 on the product manifold, the critical points must be exactly
//! the pairs of factor critical points, the Hessian must be block diagonal,
//! and Morse indices must add; [`verify_index_additivity`] checks all of it
//! and reports per-point evidence.

mod catalog;
mod chart;
mod error;
mod fd;
mod product;
mod report;
mod search;
pub mod tolerances;

pub use catalog::{catalog, circle_cos, sphere_height, torus_height};
pub use chart::{Chart, ChartFunction};
pub use error::{LabError, Result};
pub use fd::{gradient_fd, hessian_fd, hessian_fd_with_step, symmetric_eigenvalues};
pub use product::product_function;
pub use report::{verify_index_additivity, IndexAdditivityReport, PairMatch};
pub use search::{find_critical_points, histogram, CriticalPoint};
