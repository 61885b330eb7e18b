//! The on-disk descriptor format (UTF-8 JSON).
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "oriented": false,
//!   "counts": [1, 1, 2],
//!   "manifold": { "class": [["P", 1]], "betti": [1, 0, 1] }
//! }
//! ```
//!
//! Output is canonical: class labels sorted lexicographically, counts of
//! length dimension + 1, and a trailing newline.

use serde::{Deserialize, Serialize};

use crate::counts::IndexCountVector;
use crate::descriptor::MorseDescriptor;
use crate::error::Result;
use crate::manifold::ManifoldClass;
use crate::token::Token;

#[derive(Serialize, Deserialize)]
struct DescriptorFile {
    dimension: usize,
    oriented: bool,
    counts: Vec<i64>,
    manifold: ManifoldSection,
}

#[derive(Serialize, Deserialize)]
struct ManifoldSection {
    class: Token,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    betti: Option<Vec<i64>>,
}

/// Parse a descriptor from its JSON form.
///
/// Parsing is structural only; semantic problems (wrong counts length, odd
/// Euler characteristic, ...) are left for [`MorseDescriptor::validate`].
pub fn descriptor_from_json(text: &str) -> Result<MorseDescriptor> {
    let file: DescriptorFile = serde_json::from_str(text)?;
    Ok(MorseDescriptor::new(
        ManifoldClass::new(
            file.dimension,
            file.oriented,
            file.manifold.class,
            file.manifold.betti,
        ),
        IndexCountVector::new(file.dimension, file.counts),
    ))
}

/// Render a descriptor in canonical JSON.
pub fn descriptor_to_json(d: &MorseDescriptor) -> String {
    let file = DescriptorFile {
        dimension: d.dimension(),
        oriented: d.oriented(),
        counts: d.counts().as_slice().to_vec(),
        manifold: ManifoldSection {
            class: d.manifold().token().clone(),
            betti: d.manifold().betti().map(<[i64]>::to_vec),
        },
    };
    let mut text = serde_json::to_string_pretty(&file).expect("descriptor serialization");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes_labels_and_mod2() {
        let text = r#"{
            "dimension": 2,
            "oriented": false,
            "counts": [1, 2, 1],
            "manifold": { "class": [["Q", 1], ["P", 3]] }
        }"#;
        let d = descriptor_from_json(text).unwrap();
        assert_eq!(
            d.manifold().token().terms().collect::<Vec<_>>(),
            vec![("P", 1), ("Q", 1)]
        );
        assert!(d.validate().is_empty());
    }

    #[test]
    fn round_trip_is_identity_on_canonical_output() {
        let text = r#"{
            "dimension": 1,
            "oriented": true,
            "counts": [2, 2],
            "manifold": { "class": [["B", -1], ["A", 2]], "betti": [1, 1] }
        }"#;
        let d = descriptor_from_json(text).unwrap();
        let canonical = descriptor_to_json(&d);
        let d2 = descriptor_from_json(&canonical).unwrap();
        assert_eq!(d, d2);
        assert_eq!(descriptor_to_json(&d2), canonical);
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(descriptor_from_json("{").is_err());
        assert!(descriptor_from_json(r#"{"dimension": -1}"#).is_err());
    }

    #[test]
    fn betti_absent_stays_absent() {
        let text = r#"{"dimension":1,"oriented":false,"counts":[1,1],"manifold":{"class":[]}}"#;
        let d = descriptor_from_json(text).unwrap();
        assert!(d.manifold().betti().is_none());
        assert!(!descriptor_to_json(&d).contains("betti"));
    }
}
