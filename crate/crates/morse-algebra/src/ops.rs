//! Descriptor-level operations: the abelian sum, the diagonal product, the
//! closed product formula for phi, and handle stabilization.

use serde::{Deserialize, Serialize};

use crate::counts::IndexCountVector;
use crate::descriptor::MorseDescriptor;
use crate::error::{Error, Result};
use crate::manifold::ManifoldClass;

/// Whether `stabilize` adds the single extra middle cancelling pair.
///
/// `Auto` fires exactly once when the dimension is congruent to 1 mod 4 and
/// at least one pair block is added; `On` and `Off` force the two readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtraMiddlePair {
    #[default]
    Auto,
    On,
    Off,
}

impl MorseDescriptor {
    /// Disjoint union of two functions: counts and class tokens add, Betti
    /// numbers add when both sides carry them.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let oriented = self.oriented();
        let token = self.manifold().token().add(other.manifold().token(), oriented);
        let betti = match (self.manifold().betti(), other.manifold().betti()) {
            (Some(a), Some(b)) => Some(
                (0..=self.dimension())
                    .map(|j| {
                        a.get(j).copied().unwrap_or(0) + b.get(j).copied().unwrap_or(0)
                    })
                    .collect(),
            ),
            _ => None,
        };
        Ok(Self::new(
            ManifoldClass::new(self.dimension(), oriented, token, betti),
            self.counts().add(other.counts()),
        ))
    }

    /// The descriptor of -f: indices reverse, the class negates when
    /// oriented, and the manifold (hence its Betti data) is unchanged.
    pub fn negated(&self) -> Self {
        let oriented = self.oriented();
        let token = self.manifold().token().negated(oriented);
        Self::new(
            ManifoldClass::new(
                self.dimension(),
                oriented,
                token,
                self.manifold().betti().map(<[i64]>::to_vec),
            ),
            self.counts().reversed(),
        )
    }

    /// The diagonal product of two functions: a function on the product
    /// manifold whose critical points are pairs of critical points with
    /// indices adding, so the count vectors convolve. Tokens multiply
    /// formally and Betti numbers convolve (the rational Kuenneth formula)
    /// when both sides carry them.
    pub fn diagonal_product(&self, other: &Self) -> Result<Self> {
        if self.oriented() != other.oriented() {
            return Err(Error::OrientationMismatch);
        }
        let oriented = self.oriented();
        let m = self.dimension() + other.dimension();
        let token = self.manifold().token().mul(other.manifold().token(), oriented);
        let betti = match (self.manifold().betti(), other.manifold().betti()) {
            (Some(a), Some(b)) => {
                let mut conv = vec![0i64; m + 1];
                for (i, &ai) in a.iter().enumerate().take(self.dimension() + 1) {
                    for (j, &bj) in b.iter().enumerate().take(other.dimension() + 1) {
                        conv[i + j] += ai * bj;
                    }
                }
                Some(conv)
            }
            _ => None,
        };
        Ok(Self::new(
            ManifoldClass::new(m, oriented, token, betti),
            self.counts().convolve(other.counts()),
        ))
    }

    /// Closed formula for phi_{m1+m2-j} of a diagonal product in terms of
    /// the factor counts, valid for m1 <= m2 and 0 <= j < m1:
    ///
    /// sum_{j1=0}^{j} C_{m1-j+j1}(f1) C_{m2-j1}(f2)
    ///   - sum_{j1=0}^{j} C_{j1}(f1) C_{j-j1}(f2)
    pub fn product_phi_formula(&self, other: &Self, j: usize) -> Result<i64> {
        let m1 = self.dimension();
        let m2 = other.dimension();
        if m1 > m2 {
            return Err(Error::DimensionOrder { m1, m2 });
        }
        if j >= m1 {
            return Err(Error::FormulaIndexOutOfRange { j, m1 });
        }
        let c1 = self.counts();
        let c2 = other.counts();
        let top: i64 = (0..=j).map(|j1| c1.get(m1 - j + j1) * c2.get(m2 - j1)).sum();
        let bottom: i64 = (0..=j).map(|j1| c1.get(j1) * c2.get(j - j1)).sum();
        Ok(top - bottom)
    }

    /// Add `k` cancelling handle pairs at every index step. For each
    /// 0 <= j <= m-1 this contributes k critical points of index j and k of
    /// index j+1, leaving the manifold (and its class) unchanged. The extra
    /// middle pair at indices (floor(m/2), floor(m/2)+1) is governed by
    /// `extra`.
    pub fn stabilize(&self, k: u32, extra: ExtraMiddlePair) -> Result<Self> {
        if self.counts().is_empty() {
            return Err(Error::EmptyDescriptor);
        }
        let m = self.dimension();
        let fire_extra = match extra {
            ExtraMiddlePair::On => true,
            ExtraMiddlePair::Off => false,
            ExtraMiddlePair::Auto => m % 4 == 1 && k >= 1,
        };
        if fire_extra && m == 0 {
            return Err(Error::NoMiddlePair);
        }
        let mut counts: Vec<i64> = (0..=m).map(|j| self.counts().get(j)).collect();
        if m >= 1 {
            for j in 0..m {
                counts[j] += i64::from(k);
                counts[j + 1] += i64::from(k);
            }
        }
        if fire_extra {
            counts[m / 2] += 1;
            counts[m / 2 + 1] += 1;
        }
        Ok(Self::new(
            self.manifold().clone(),
            IndexCountVector::new(m, counts),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::token::Token;

    fn unoriented(m: usize, counts: Vec<i64>) -> MorseDescriptor {
        MorseDescriptor::new(
            ManifoldClass::new(m, false, Token::generator("P"), None),
            IndexCountVector::new(m, counts),
        )
    }

    #[test]
    fn disjoint_union_adds_counts() {
        let a = unoriented(1, vec![1, 1]);
        let b = unoriented(1, vec![2, 2]);
        let sum = a.disjoint_union(&b).unwrap();
        assert_eq!(sum.counts().as_slice(), &[3, 3]);
        // P + P = 0 mod 2: M disjoint-union M bounds a cylinder.
        assert!(sum.manifold().token().is_zero());
    }

    #[test]
    fn disjoint_union_identity() {
        let d = MorseDescriptor::new(
            ManifoldClass::new(2, false, Token::generator("P"), Some(vec![1, 0, 1])),
            IndexCountVector::new(2, vec![1, 1, 2]),
        );
        let e = MorseDescriptor::empty(2, false);
        assert_eq!(d.disjoint_union(&e).unwrap(), d);
        assert_eq!(e.disjoint_union(&d).unwrap(), d);
    }

    #[test]
    fn disjoint_union_rejects_shape_mismatch() {
        let a = unoriented(1, vec![1, 1]);
        let b = unoriented(2, vec![1, 0, 1]);
        assert!(matches!(
            a.disjoint_union(&b),
            Err(Error::DimensionMismatch { .. })
        ));
        let c = MorseDescriptor::new(
            ManifoldClass::new(1, true, Token::zero(), None),
            IndexCountVector::new(1, vec![1, 1]),
        );
        assert!(matches!(a.disjoint_union(&c), Err(Error::OrientationMismatch)));
    }

    #[test]
    fn negation_reverses_counts() {
        let d = unoriented(2, vec![1, 1, 2]);
        let n = d.negated();
        assert_eq!(n.counts().as_slice(), &[2, 1, 1]);
        assert_eq!(n.negated(), d);
        for j in 0..=2 {
            assert_eq!(n.phi(j).unwrap(), -d.phi(j).unwrap());
        }
    }

    #[test]
    fn negation_negates_oriented_tokens_only() {
        let o = MorseDescriptor::new(
            ManifoldClass::new(1, true, Token::generator("P"), None),
            IndexCountVector::new(1, vec![1, 1]),
        );
        assert_eq!(
            o.negated().manifold().token().terms().collect::<Vec<_>>(),
            vec![("P", -1)]
        );
        let u = unoriented(1, vec![1, 1]);
        assert_eq!(u.negated().manifold().token(), u.manifold().token());
    }

    #[test]
    fn diagonal_product_convolves_counts_and_betti() {
        let s1 = MorseDescriptor::new(
            ManifoldClass::new(1, false, Token::generator("A"), Some(vec![1, 1])),
            IndexCountVector::new(1, vec![1, 1]),
        );
        let p = s1.diagonal_product(&s1).unwrap();
        assert_eq!(p.counts().as_slice(), &[1, 2, 1]);
        assert_eq!(p.manifold().betti(), Some(&[1, 2, 1][..]));
        assert_eq!(
            p.manifold().token().terms().collect::<Vec<_>>(),
            vec![("A*A", 1)]
        );
        assert!(p.validate().is_empty());
    }

    #[test]
    fn diagonal_product_total_count_identity() {
        let a = unoriented(2, vec![2, 2, 2]);
        let b = unoriented(1, vec![3, 3]);
        let p = a.diagonal_product(&b).unwrap();
        assert_eq!(p.counts().total(), a.counts().total() * b.counts().total());
    }

    #[test]
    fn product_phi_formula_examples() {
        let circle = unoriented(1, vec![1, 1]);
        assert_eq!(circle.product_phi_formula(&circle, 0).unwrap(), 0);

        let b = unoriented(1, vec![2, 2]);
        let c = unoriented(2, vec![1, 1, 2]);
        assert_eq!(b.product_phi_formula(&c, 0).unwrap(), 2);
        // Against the convolution route: conv = (2,4,6,4), phi_3 = 4 - 2.
        let conv = b.diagonal_product(&c).unwrap();
        assert_eq!(conv.phi(3).unwrap(), 2);

        let s2 = unoriented(2, vec![1, 0, 1]);
        assert_eq!(s2.product_phi_formula(&s2, 1).unwrap(), 0);
    }

    #[test]
    fn product_phi_formula_rejects_bad_arguments() {
        let a = unoriented(2, vec![1, 0, 1]);
        let b = unoriented(1, vec![1, 1]);
        assert!(matches!(
            a.product_phi_formula(&b, 0),
            Err(Error::DimensionOrder { .. })
        ));
        assert!(matches!(
            b.product_phi_formula(&a, 1),
            Err(Error::FormulaIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn stabilize_examples() {
        let circle = unoriented(1, vec![1, 1]);
        let s = circle.stabilize(2, ExtraMiddlePair::Auto).unwrap();
        assert_eq!(s.counts().as_slice(), &[4, 4]);

        let d = unoriented(2, vec![1, 1, 2]);
        let s = d.stabilize(1, ExtraMiddlePair::Auto).unwrap();
        assert_eq!(s.counts().as_slice(), &[2, 3, 3]);

        assert_eq!(d.stabilize(0, ExtraMiddlePair::Auto).unwrap(), d);
    }

    #[test]
    fn stabilize_preserves_euler_characteristic() {
        let d = unoriented(2, vec![1, 1, 2]);
        for k in 0..5 {
            for mode in [ExtraMiddlePair::Auto, ExtraMiddlePair::On, ExtraMiddlePair::Off] {
                let s = d.stabilize(k, mode).unwrap();
                assert_eq!(s.euler_characteristic(), d.euler_characteristic());
                assert!(s.validate().is_empty());
            }
        }
    }

    #[test]
    fn stabilize_rejects_empty() {
        let e = MorseDescriptor::empty(2, false);
        assert!(matches!(
            e.stabilize(1, ExtraMiddlePair::Auto),
            Err(Error::EmptyDescriptor)
        ));
    }

    #[test]
    fn stabilize_middle_pair_needs_positive_dimension() {
        let pt = unoriented(0, vec![2]);
        assert!(pt.stabilize(3, ExtraMiddlePair::Auto).is_ok());
        assert!(matches!(
            pt.stabilize(3, ExtraMiddlePair::On),
            Err(Error::NoMiddlePair)
        ));
    }
}
