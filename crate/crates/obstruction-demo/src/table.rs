//! The stabilization family and its product table.

use morse_algebra::{CobordismInvariant, ExtraMiddlePair, MorseDescriptor};
use serde::Serialize;

use crate::{DemoError, Result};

/// One row of the obstruction table: the k-th family member's invariant and
/// the invariant of its diagonal product with the fixed factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionRow {
    pub k: u32,
    pub family_invariant: CobordismInvariant,
    /// phi at the top index m + m' of the product, computed by the closed
    /// formula and cross-checked against the convolution route.
    pub product_phi_top: i64,
    pub product_invariant: CobordismInvariant,
}

/// The stabilization family f_0, ..., f_cap of a descriptor.
///
/// Every member shares the invariant of `d_prime` and C_0 strictly
/// increases along the family.
pub fn build_family(
    d_prime: &MorseDescriptor,
    cap: u32,
    extra: ExtraMiddlePair,
) -> Result<Vec<MorseDescriptor>> {
    (0..=cap)
        .map(|k| d_prime.stabilize(k, extra).map_err(DemoError::from))
        .collect()
}

/// Tabulate the family against a fixed factor `d`.
///
/// Row k records the invariant of f_k and of the diagonal product d * f_k,
/// plus the top phi of the product. The top phi is evaluated twice — by the
/// closed factor-count formula and on the full convolution — and any
/// disagreement is a hard error.
pub fn obstruction_table(
    d: &MorseDescriptor,
    d_prime: &MorseDescriptor,
    cap: u32,
    extra: ExtraMiddlePair,
) -> Result<Vec<ObstructionRow>> {
    if d.oriented() != d_prime.oriented() {
        return Err(morse_algebra::Error::OrientationMismatch.into());
    }
    let m = d.dimension();
    let m_prime = d_prime.dimension();
    let top = m + m_prime;
    let mut rows = Vec::with_capacity(cap as usize + 1);
    for (k, member) in build_family(d_prime, cap, extra)?.into_iter().enumerate() {
        let k = k as u32;
        let closed = d.counts().get(m) * member.counts().get(m_prime)
            - d.counts().get(0) * member.counts().get(0);
        let product = d.diagonal_product(&member)?;
        let convolved = product.phi(top)?;
        if closed != convolved {
            return Err(DemoError::PhiMismatch {
                k,
                closed,
                convolved,
            });
        }
        rows.push(ObstructionRow {
            k,
            family_invariant: member.cobordism_invariant()?,
            product_phi_top: closed,
            product_invariant: product.cobordism_invariant()?,
        });
    }
    Ok(rows)
}

/// Run the full verification and report per-assertion verdicts.
///
/// The family invariants must agree; then, depending on whether phi_m of the
/// fixed factor vanishes, the product invariants must be pairwise distinct
/// or the top-phi column must be constant.
pub fn verify_obstruction(
    d: &MorseDescriptor,
    d_prime: &MorseDescriptor,
    cap: u32,
    extra: ExtraMiddlePair,
) -> Result<crate::ObstructionReport> {
    if cap < 1 {
        return Err(DemoError::CapTooSmall);
    }
    let rows = obstruction_table(d, d_prime, cap, extra)?;
    let phi_m = d.phi(d.dimension())?;
    Ok(crate::ObstructionReport::from_rows(phi_m, rows))
}
