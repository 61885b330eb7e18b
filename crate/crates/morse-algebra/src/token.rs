//! Formal integer combinations of manifold class labels.
//!
//! Cobordism classes of manifolds are carried around as opaque generator
//! labels; no ring relations between them are assumed. Products concatenate
//! labels, so the label of a product class is the sorted multiset of the
//! factor labels joined with [`PRODUCT_SEPARATOR`].

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Separator between atomic labels inside a product label.
pub const PRODUCT_SEPARATOR: char = '*';

/// A formal linear combination of generator labels with integer coefficients.
///
/// Labels are kept in canonical form: each label is the sorted multiset of
/// its `*`-separated atoms, zero coefficients are dropped, and the map is
/// ordered, so structural equality is semantic equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Token {
    terms: BTreeMap<String, i64>,
}

fn canonical_label(label: &str) -> String {
    let mut atoms: Vec<&str> = label
        .split(PRODUCT_SEPARATOR)
        .filter(|a| !a.is_empty())
        .collect();
    atoms.sort_unstable();
    atoms.join(&PRODUCT_SEPARATOR.to_string())
}

impl Token {
    /// The zero combination (class of the empty manifold).
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single generator with coefficient 1.
    pub fn generator(label: &str) -> Self {
        Self::from_pairs([(label.to_string(), 1)])
    }

    /// Build from (label, coefficient) pairs, summing duplicates.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (String, i64)>,
    {
        let mut terms = BTreeMap::new();
        for (label, coeff) in pairs {
            *terms.entry(canonical_label(&label)).or_insert(0) += coeff;
        }
        terms.retain(|_, c| *c != 0);
        Token { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sorted (label, coefficient) view.
    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> {
        self.terms.iter().map(|(l, c)| (l.as_str(), *c))
    }

    /// Reduce every coefficient mod 2 (unoriented class arithmetic).
    pub fn reduced_mod2(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.iter_mut().for_each(|(_, c)| *c = c.rem_euclid(2));
        terms.retain(|_, c| *c != 0);
        Token { terms }
    }

    /// Coefficient-wise sum; reduced mod 2 when `oriented` is false.
    pub fn add(&self, other: &Token, oriented: bool) -> Self {
        let mut terms = self.terms.clone();
        for (label, coeff) in &other.terms {
            *terms.entry(label.clone()).or_insert(0) += coeff;
        }
        terms.retain(|_, c| *c != 0);
        let out = Token { terms };
        if oriented {
            out
        } else {
            out.reduced_mod2()
        }
    }

    /// Additive inverse. Mod 2 every class is its own inverse.
    pub fn negated(&self, oriented: bool) -> Self {
        if !oriented {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect();
        Token { terms }
    }

    /// Formal product: labels concatenate (as sorted atom multisets) and
    /// coefficients multiply; reduced mod 2 when `oriented` is false.
    pub fn mul(&self, other: &Token, oriented: bool) -> Self {
        let mut terms: BTreeMap<String, i64> = BTreeMap::new();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let label = canonical_label(&format!("{l1}{PRODUCT_SEPARATOR}{l2}"));
                *terms.entry(label).or_insert(0) += c1 * c2;
            }
        }
        terms.retain(|_, c| *c != 0);
        let out = Token { terms };
        if oriented {
            out
        } else {
            out.reduced_mod2()
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if *coeff < 0 {
                    write!(f, "-")?;
                }
            } else if *coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}{PRODUCT_SEPARATOR}{label}")?;
            }
        }
        Ok(())
    }
}

// Serialized as a sorted list of [label, coefficient] pairs, matching the
// "class" field of the descriptor file format.
impl Serialize for Token {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (label, coeff) in &self.terms {
            seq.serialize_element(&(label, coeff))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Token {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairsVisitor;
        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = Token;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a list of [label, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Token, A::Error> {
                let mut pairs = Vec::new();
                while let Some(pair) = seq.next_element::<(String, i64)>()? {
                    pairs.push(pair);
                }
                Ok(Token::from_pairs(pairs))
            }
        }
        deserializer.deserialize_seq(PairsVisitor)
    }
}
