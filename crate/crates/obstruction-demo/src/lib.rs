//! The product obstruction, reproduced on exact descriptor arithmetic.
//!
//! Stabilizing a descriptor by cancelling handle pairs never moves its
//! cobordism invariant, so `{f_k}` is one class. Taking the diagonal
//! product with a fixed descriptor `f` whose top phi does not vanish sends
//! the members of that single class to pairwise-distinct classes: the top
//! phi of the product is
//!
//! ```text
//! phi_top(k) = C_m(f) * C_m'(f_k) - C_0(f) * C_0(f_k)
//! ```
//!
//! which grows by phi_m(f) with every stabilization step. A class-level
//! product compatible with diagonal products therefore cannot exist.

mod report;
mod table;

pub use report::{render_rows_csv, BranchCheck, ObstructionBranch, ObstructionReport};
pub use table::{build_family, obstruction_table, verify_obstruction, ObstructionRow};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Algebra(#[from] morse_algebra::Error),

    /// The closed formula and the convolution route disagreed; this cannot
    /// happen unless the descriptor arithmetic itself is wrong.
    #[error(
        "internal phi disagreement at k = {k}: closed formula gives {closed}, \
         convolution gives {convolved}"
    )]
    PhiMismatch { k: u32, closed: i64, convolved: i64 },

    #[error("the family needs at least two members; pass a cap of 1 or more")]
    CapTooSmall,

    #[error("failed to render table output: {0}")]
    Render(String),
}

pub type Result<T> = std::result::Result<T, DemoError>;
