//! The classifying invariant of a Morse function up to fold cobordism.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::descriptor::MorseDescriptor;
use crate::error::{Error, Result};
use crate::token::Token;

/// First index of the recorded phi range for dimension `m`.
///
/// The classification records phi_j for floor((m+3)/2) <= j <= m; the lower
/// half is determined by antisymmetry.
pub fn phi_range_start(m: usize) -> usize {
    (m + 3) / 2
}

/// The complete fold-cobordism invariant of a descriptor.
///
/// Two descriptors of equal dimension and orientation are cobordant exactly
/// when these values are field-wise equal: the manifold class token, the
/// phi-vector over the recorded range, and (for oriented dimensions 4k+1)
/// the mod-2 defect of sigma(M) against the lower phi sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismInvariant {
    pub dimension: usize,
    pub oriented: bool,
    pub token: Token,
    /// phi_j for j = phi_range_start(m) ..= m; empty when the range is.
    pub phis: Vec<i64>,
    /// Present exactly when `oriented` and `dimension % 4 == 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z2: Option<u8>,
}

impl CobordismInvariant {
    /// The recorded phi entry at absolute index `j`, if `j` is in range.
    pub fn phi_at(&self, j: usize) -> Option<i64> {
        let start = phi_range_start(self.dimension);
        if j < start || j > self.dimension {
            return None;
        }
        self.phis.get(j - start).copied()
    }
}

impl fmt::Display for CobordismInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "token={}; phis=[", self.token)?;
        for (i, p) in self.phis.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")?;
        if let Some(z) = self.z2 {
            write!(f, "; z2={z}")?;
        }
        Ok(())
    }
}

impl MorseDescriptor {
    /// Compute the classifying invariant.
    ///
    /// Oriented descriptors in dimension 4k+1 need Betti numbers: the extra
    /// mod-2 component is sigma(M) minus the sum of phi_0..phi_2k.
    pub fn cobordism_invariant(&self) -> Result<CobordismInvariant> {
        let m = self.dimension();
        let oriented = self.oriented();
        let start = phi_range_start(m);
        let counts = self.counts();
        let phis: Vec<i64> = (start..=m).map(|j| counts.get(j) - counts.get(m - j)).collect();
        let z2 = if oriented && m % 4 == 1 {
            let sigma = self
                .manifold()
                .sigma()
                .ok_or(Error::MissingBetti { m })?;
            let half = m / 2; // 2k
            let phi_sum: i64 = (0..=half).map(|j| counts.get(j) - counts.get(m - j)).sum();
            Some((sigma - phi_sum).rem_euclid(2) as u8)
        } else {
            None
        };
        Ok(CobordismInvariant {
            dimension: m,
            oriented,
            token: self.manifold().token().clone(),
            phis,
            z2,
        })
    }

    /// True iff the two descriptors have equal classifying invariants.
    pub fn is_cobordant(&self, other: &Self) -> Result<bool> {
        self.require_same_shape(other)?;
        Ok(self.cobordism_invariant()? == other.cobordism_invariant()?)
    }
}
