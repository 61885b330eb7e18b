//! Formal manifold classes: dimension, orientability, class token, and
//! optional rational Betti numbers.

use crate::counts::alternating_sum;
use crate::token::Token;

/// A closed manifold reduced to the data the classification consumes.
///
/// The cobordism class is a formal [`Token`]; no relations in the cobordism
/// rings are assumed. Betti numbers are optional input data and are the only
/// source for the half-rank sum sigma(M) used in oriented dimensions 4k+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldClass {
    m: usize,
    oriented: bool,
    token: Token,
    betti: Option<Vec<i64>>,
}

impl ManifoldClass {
    /// Unoriented tokens are reduced mod 2 on construction, so the stored
    /// coefficients are always canonical.
    pub fn new(m: usize, oriented: bool, token: Token, betti: Option<Vec<i64>>) -> Self {
        let token = if oriented { token } else { token.reduced_mod2() };
        Self {
            m,
            oriented,
            token,
            betti,
        }
    }

    /// The empty manifold, with identically zero Betti numbers.
    pub fn empty(m: usize, oriented: bool) -> Self {
        Self::new(m, oriented, Token::zero(), Some(vec![0; m + 1]))
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    pub fn token(&self) -> &Token {
        &self.token
    }

    pub fn betti(&self) -> Option<&[i64]> {
        self.betti.as_deref()
    }

    /// sigma(M) = b_0 + ... + b_2k for dimension m = 4k+1; `None` when the
    /// dimension has the wrong residue or Betti numbers are absent.
    pub fn sigma(&self) -> Option<i64> {
        if self.m % 4 != 1 {
            return None;
        }
        let half = self.m / 2; // 2k for m = 4k+1
        let betti = self.betti.as_ref()?;
        Some((0..=half).map(|j| betti.get(j).copied().unwrap_or(0)).sum())
    }

    pub(crate) fn collect_violations(&self, out: &mut Vec<String>) {
        let Some(betti) = &self.betti else { return };
        if betti.len() != self.m + 1 {
            out.push(format!(
                "betti has length {} but dimension {} requires {} entries",
                betti.len(),
                self.m,
                self.m + 1
            ));
        }
        for (j, &b) in betti.iter().enumerate() {
            if b < 0 {
                out.push(format!("betti[{j}] = {b} is negative"));
            }
        }
        if self.m % 2 == 1 {
            let chi = alternating_sum(betti);
            if chi != 0 {
                out.push(format!(
                    "odd-dimensional closed manifolds have Euler characteristic 0, \
                     but the alternating Betti sum is {chi}"
                ));
            }
        }
        if self.oriented {
            for j in 0..=self.m / 2 {
                let bj = betti.get(j).copied().unwrap_or(0);
                let bmj = betti.get(self.m - j).copied().unwrap_or(0);
                if bj != bmj {
                    out.push(format!(
                        "Poincare duality fails: b_{j} = {bj} but b_{} = {bmj}",
                        self.m - j
                    ));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unoriented_tokens_reduce_on_construction() {
        let m = ManifoldClass::new(2, false, Token::from_pairs([("P".into(), 3)]), None);
        assert_eq!(m.token().terms().collect::<Vec<_>>(), vec![("P", 1)]);
    }

    #[test]
    fn sigma_only_in_dimension_4k_plus_1() {
        let m1 = ManifoldClass::new(1, true, Token::zero(), Some(vec![1, 1]));
        assert_eq!(m1.sigma(), Some(1));
        let m5 = ManifoldClass::new(5, true, Token::zero(), Some(vec![1, 2, 0, 0, 2, 1]));
        assert_eq!(m5.sigma(), Some(3));
        let m2 = ManifoldClass::new(2, true, Token::zero(), Some(vec![1, 0, 1]));
        assert_eq!(m2.sigma(), None);
        let m1_no_betti = ManifoldClass::new(1, true, Token::zero(), None);
        assert_eq!(m1_no_betti.sigma(), None);
    }

    #[test]
    fn duality_violation_reported_for_oriented_classes() {
        let m = ManifoldClass::new(2, true, Token::zero(), Some(vec![1, 0, 3]));
        let mut out = Vec::new();
        m.collect_violations(&mut out);
        assert_eq!(out.len(), 1);
        assert!(out[0].contains("Poincare duality"));
    }

    #[test]
    fn odd_betti_euler_violation() {
        let m = ManifoldClass::new(3, false, Token::zero(), Some(vec![1, 0, 0, 2]));
        let mut out = Vec::new();
        m.collect_violations(&mut out);
        assert_eq!(out.len(), 1);
    }
}
