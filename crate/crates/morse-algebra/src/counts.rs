//! Critical-point counts by index: the tuple (C_0(f), ..., C_m(f)).

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Counts of critical points of a Morse function, indexed by Morse index.
///
/// Entry `j` is C_j(f), the number of critical points of index `j`. The
/// vector logically has length `m + 1` for a function on an m-manifold;
/// entries are signed so that invalid data can be built and reported by
/// [`crate::MorseDescriptor::validate`] instead of being unrepresentable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCountVector {
    m: usize,
    counts: Vec<i64>,
}

impl IndexCountVector {
    pub fn new(m: usize, counts: Vec<i64>) -> Self {
        Self { m, counts }
    }

    /// The all-zero vector in dimension `m` (no critical points).
    pub fn zeros(m: usize) -> Self {
        Self::new(m, vec![0; m + 1])
    }

    /// Histogram of a list of observed indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(m: usize, indices: I) -> Self {
        let mut counts = vec![0i64; m + 1];
        for i in indices {
            if i <= m {
                counts[i] += 1;
            }
        }
        Self::new(m, counts)
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    /// C_j(f); zero for entries outside the stored vector.
    pub fn get(&self, j: usize) -> i64 {
        self.counts.get(j).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }

    /// The alternating sum over indices: the Euler characteristic of the
    /// underlying closed manifold.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.counts)
    }

    /// phi_j(f) = C_j(f) - C_{m-j}(f).
    pub fn phi(&self, j: usize) -> Result<i64> {
        if j > self.m {
            return Err(Error::IndexOutOfRange { j, m: self.m });
        }
        Ok(self.get(j) - self.get(self.m - j))
    }

    /// Entrywise sum; caller guarantees equal dimensions.
    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        let counts = (0..=self.m).map(|j| self.get(j) + other.get(j)).collect();
        Self::new(self.m, counts)
    }

    /// Index reversal j -> m - j, the count vector of -f.
    pub fn reversed(&self) -> Self {
        let counts = (0..=self.m).map(|j| self.get(self.m - j)).collect();
        Self::new(self.m, counts)
    }

    /// Integer convolution: entry j of the result sums C_a(f1) * C_b(f2)
    /// over a + b = j. This is the index histogram of a diagonal product,
    /// since indices of paired critical points add.
    pub fn convolve(&self, other: &Self) -> Self {
        let m = self.m + other.m;
        let mut counts = vec![0i64; m + 1];
        for a in 0..=self.m {
            let ca = self.get(a);
            if ca == 0 {
                continue;
            }
            for b in 0..=other.m {
                counts[a + b] += ca * other.get(b);
            }
        }
        Self::new(m, counts)
    }

    pub(crate) fn collect_violations(&self, out: &mut Vec<String>) {
        if self.counts.len() != self.m + 1 {
            out.push(format!(
                "counts has length {} but dimension {} requires {} entries",
                self.counts.len(),
                self.m,
                self.m + 1
            ));
        }
        for (j, &c) in self.counts.iter().enumerate() {
            if c < 0 {
                out.push(format!("counts[{j}] = {c} is negative"));
            }
        }
        if !self.is_empty() {
            if self.get(0) < 1 {
                out.push(
                    "nonempty count vector has no index-0 critical point (every nonempty closed \
                     manifold carries a minimum)"
                        .to_string(),
                );
            }
            if self.get(self.m) < 1 {
                out.push(format!(
                    "nonempty count vector has no index-{} critical point (every nonempty closed \
                     manifold carries a maximum)",
                    self.m
                ));
            }
            if self.m % 2 == 1 {
                let chi = self.euler_characteristic();
                if chi != 0 {
                    out.push(format!(
                        "odd-dimensional closed manifolds have Euler characteristic 0, \
                         but the alternating count sum is {chi}"
                    ));
                }
            }
        }
    }
}

pub(crate) fn alternating_sum(values: &[i64]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(j, &v)| if j % 2 == 0 { v } else { -v })
        .sum()
}

impl fmt::Display for IndexCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.counts.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Serialized as the bare counts list; the dimension is the length minus one.
impl Serialize for IndexCountVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IndexCountVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CountsVisitor;
        impl<'de> Visitor<'de> for CountsVisitor {
            type Value = IndexCountVector;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a non-empty list of integer counts")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<IndexCountVector, A::Error> {
                let mut counts: Vec<i64> = Vec::new();
                while let Some(c) = seq.next_element()? {
                    counts.push(c);
                }
                if counts.is_empty() {
                    return Err(serde::de::Error::invalid_length(0, &self));
                }
                Ok(IndexCountVector::new(counts.len() - 1, counts))
            }
        }
        deserializer.deserialize_seq(CountsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(IndexCountVector::new(2, vec![1, 1, 2]).euler_characteristic(), 2);
        assert_eq!(IndexCountVector::new(2, vec![1, 2, 1]).euler_characteristic(), 0);
        assert_eq!(IndexCountVector::zeros(3).euler_characteristic(), 0);
    }

    #[test]
    fn phi_examples() {
        let v = IndexCountVector::new(2, vec![1, 1, 2]);
        assert_eq!(v.phi(2).unwrap(), 1);
        let sphere3 = IndexCountVector::new(3, vec![1, 0, 0, 1]);
        assert_eq!(sphere3.phi(3).unwrap(), 0);
        assert!(v.phi(3).is_err());
    }

    #[test]
    fn phi_is_antisymmetric() {
        let v = IndexCountVector::new(4, vec![1, 3, 0, 2, 2]);
        for j in 0..=4 {
            assert_eq!(v.phi(j).unwrap(), -v.phi(4 - j).unwrap());
        }
        // Middle index of an even-dimensional vector.
        assert_eq!(v.phi(2).unwrap(), 0);
    }

    #[test]
    fn convolution_oracle_brute_force() {
        // Enumerate all index pairs (a, b) and histogram a + b; this is the
        // independent oracle the convolution must reproduce.
        let v1 = IndexCountVector::new(2, vec![1, 0, 1]);
        let v2 = IndexCountVector::new(3, vec![1, 0, 0, 1]);
        let mut expect = vec![0i64; 6];
        for a in 0..=2usize {
            for b in 0..=3usize {
                for _ in 0..(v1.get(a) * v2.get(b)) {
                    expect[a + b] += 1;
                }
            }
        }
        assert_eq!(v1.convolve(&v2).as_slice(), &expect[..]);
        assert_eq!(expect, vec![1, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn convolution_examples() {
        let a = IndexCountVector::new(1, vec![1, 1]);
        assert_eq!(a.convolve(&a).as_slice(), &[1, 2, 1]);
        let b = IndexCountVector::new(1, vec![2, 2]);
        let c = IndexCountVector::new(2, vec![1, 1, 2]);
        assert_eq!(b.convolve(&c).as_slice(), &[2, 4, 6, 4]);
    }

    #[test]
    fn reversal_is_an_involution() {
        let v = IndexCountVector::new(2, vec![1, 1, 2]);
        assert_eq!(v.reversed().as_slice(), &[2, 1, 1]);
        assert_eq!(v.reversed().reversed(), v);
    }

    #[test]
    fn violations_for_odd_dimension_euler() {
        let v = IndexCountVector::new(1, vec![2, 3]);
        let mut out = Vec::new();
        v.collect_violations(&mut out);
        assert_eq!(out.len(), 1);
        assert!(out[0].contains("Euler characteristic"));
    }
}
