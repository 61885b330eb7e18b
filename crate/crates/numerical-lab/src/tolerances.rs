//! All numeric thresholds in one place, in chart-coordinate units.
//!
//! Central differences on the closed-form catalog functions produce roughly
//! 1e-10 of gradient noise and 1e-6 of Hessian noise in double precision;
//! every acceptance threshold keeps a margin of about 100x over that.

/// Step for first-order central differences.
pub const H_GRAD: f64 = 1e-5;

/// Step for second-order central differences.
pub const H_HESS: f64 = 1e-4;

/// A point is critical when the finite-difference gradient norm is below this.
pub const TOL_GRAD: f64 = 1e-8;

/// Nondegeneracy: the smallest |eigenvalue| must exceed
/// `TOL_DEGENERATE * max(1, largest |eigenvalue|)`.
pub const TOL_DEGENERATE: f64 = 1e-5;

/// Converged points closer than this (periodicity-aware) are one point.
pub const TOL_DEDUPE: f64 = 1e-4;

/// Matching radius when pairing product critical points with factor points.
pub const TOL_MATCH: f64 = 1e-6;

/// Off-diagonal Hessian blocks of a product must stay below
/// `OFFDIAG_REL_MAX * max(1, largest |eigenvalue|)` entrywise.
pub const OFFDIAG_REL_MAX: f64 = 1e-6;

/// Newton seeds per axis.
pub const N_SEED: usize = 32;

/// Newton iteration cap per seed.
pub const MAX_ITER: usize = 50;

/// Products beyond this dimension are rejected to bound the seed grid.
pub const MAX_PRODUCT_DIM: usize = 4;

/// Interior margin kept by every Newton iterate; wide enough for the
/// second-difference stencil.
pub const SEARCH_MARGIN: f64 = 2.0 * H_HESS;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds_are_ordered() {
        assert!(TOL_MATCH < TOL_DEDUPE);
        assert!(TOL_GRAD < TOL_DEGENERATE);
        assert!(H_GRAD < H_HESS);
        assert!(SEARCH_MARGIN >= 2.0 * H_HESS);
        assert!(SEARCH_MARGIN >= 10.0 * H_GRAD);
    }
}
