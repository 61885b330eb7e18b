//! An abstract Morse function: a manifold class plus its index counts.

use crate::counts::IndexCountVector;
use crate::error::{Error, Result};
use crate::manifold::ManifoldClass;

/// A Morse function reduced to the data the classification depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseDescriptor {
    manifold: ManifoldClass,
    counts: IndexCountVector,
}

impl MorseDescriptor {
    /// No validity enforcement here: invalid descriptors must be
    /// constructible so [`MorseDescriptor::validate`] can report them.
    pub fn new(manifold: ManifoldClass, counts: IndexCountVector) -> Self {
        Self { manifold, counts }
    }

    /// The additive identity: empty manifold, no critical points.
    pub fn empty(m: usize, oriented: bool) -> Self {
        Self::new(ManifoldClass::empty(m, oriented), IndexCountVector::zeros(m))
    }

    pub fn manifold(&self) -> &ManifoldClass {
        &self.manifold
    }

    pub fn counts(&self) -> &IndexCountVector {
        &self.counts
    }

    pub fn dimension(&self) -> usize {
        self.counts.dimension()
    }

    pub fn oriented(&self) -> bool {
        self.manifold.oriented()
    }

    /// True when there are no critical points and the class token is zero.
    pub fn is_empty(&self) -> bool {
        self.counts.is_empty() && self.manifold.token().is_zero()
    }

    /// Check every structural invariant and return one human-readable
    /// description per violation. Empty output means the descriptor is
    /// admissible input to every operation.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.counts.collect_violations(&mut out);
        self.manifold.collect_violations(&mut out);
        if self.manifold.dimension() != self.counts.dimension() {
            out.push(format!(
                "manifold dimension {} does not match count vector dimension {}",
                self.manifold.dimension(),
                self.counts.dimension()
            ));
        }
        if self.counts.is_empty() && !self.manifold.token().is_zero() {
            out.push(
                "counts are all zero but the class token is nonzero; a nonempty closed \
                 manifold admits no critical-point-free function"
                    .to_string(),
            );
        }
        if let Some(betti) = self.manifold.betti() {
            if self.manifold.dimension() == self.counts.dimension() {
                for (j, &b) in betti.iter().enumerate() {
                    let c = self.counts.get(j);
                    if c < b {
                        out.push(format!(
                            "Morse inequality fails at index {j}: counts[{j}] = {c} < b_{j} = {b}"
                        ));
                    }
                }
                let chi_counts = self.counts.euler_characteristic();
                let chi_betti = crate::counts::alternating_sum(betti);
                if chi_counts != chi_betti {
                    out.push(format!(
                        "alternating count sum {chi_counts} differs from the alternating \
                         Betti sum {chi_betti}"
                    ));
                }
            }
        }
        out
    }

    /// The alternating sum of the counts, which equals the Euler
    /// characteristic of the source manifold.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts.euler_characteristic()
    }

    /// phi_j(f) = C_j(f) - C_{m-j}(f) for 0 <= j <= m.
    pub fn phi(&self, j: usize) -> Result<i64> {
        self.counts.phi(j)
    }

    pub(crate) fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        if self.oriented() != other.oriented() {
            return Err(Error::OrientationMismatch);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::token::Token;

    fn desc(m: usize, counts: Vec<i64>) -> MorseDescriptor {
        MorseDescriptor::new(
            ManifoldClass::new(m, false, Token::zero(), None),
            IndexCountVector::new(m, counts),
        )
    }

    #[test]
    fn torus_like_counts_are_valid() {
        assert!(desc(2, vec![1, 2, 1]).validate().is_empty());
    }

    #[test]
    fn odd_dimension_euler_violation_is_the_only_one() {
        let v = desc(1, vec![2, 3]).validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].contains("Euler characteristic"));
    }

    #[test]
    fn betti_consistency_accepted() {
        let d = MorseDescriptor::new(
            ManifoldClass::new(2, false, Token::zero(), Some(vec![1, 0, 1])),
            IndexCountVector::new(2, vec![1, 1, 2]),
        );
        assert!(d.validate().is_empty());
        assert_eq!(d.euler_characteristic(), 2);
    }

    #[test]
    fn morse_inequality_violation_reported() {
        let d = MorseDescriptor::new(
            ManifoldClass::new(2, false, Token::zero(), Some(vec![1, 2, 1])),
            IndexCountVector::new(2, vec![1, 0, 1]),
        );
        let v = d.validate();
        assert!(v.iter().any(|s| s.contains("Morse inequality")));
        assert!(v.iter().any(|s| s.contains("alternating")));
    }

    #[test]
    fn missing_extremum_reported() {
        let v = desc(2, vec![0, 1, 1]).validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].contains("minimum"));
    }

    #[test]
    fn empty_descriptor_is_valid_and_empty() {
        let e = MorseDescriptor::empty(3, true);
        assert!(e.validate().is_empty());
        assert!(e.is_empty());
        assert_eq!(e.euler_characteristic(), 0);
    }

    #[test]
    fn zero_counts_nonzero_token_rejected() {
        let d = MorseDescriptor::new(
            ManifoldClass::new(2, false, Token::generator("P"), None),
            IndexCountVector::zeros(2),
        );
        assert_eq!(d.validate().len(), 1);
    }

    #[test]
    fn dimension_cross_check() {
        let d = MorseDescriptor::new(
            ManifoldClass::new(3, false, Token::zero(), None),
            IndexCountVector::new(2, vec![1, 0, 1]),
        );
        assert!(d.validate().iter().any(|s| s.contains("does not match")));
    }
}
