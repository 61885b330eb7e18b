//! Round-trip property for the descriptor file format.

use morse_algebra::{
    descriptor_from_json, descriptor_to_json, IndexCountVector, ManifoldClass, MorseDescriptor,
    Token,
};
use proptest::prelude::*;

proptest! {
    /// Canonical output re-reads to a field-identical descriptor, and a
    /// second write is byte-identical.
    #[test]
    fn write_read_is_identity(
        m in 0usize..=6,
        oriented in any::<bool>(),
        counts in prop::collection::vec(0i64..=9, 1..=7),
        labels in prop::collection::vec(("[A-Z][a-z]{0,3}", -3i64..=3), 0..4),
        with_betti in any::<bool>(),
    ) {
        let counts = {
            let mut c = counts;
            c.resize(m + 1, 0);
            c
        };
        let betti = with_betti.then(|| counts.clone());
        let token = Token::from_pairs(labels);
        let d = MorseDescriptor::new(
            ManifoldClass::new(m, oriented, token, betti),
            IndexCountVector::new(m, counts),
        );
        let text = descriptor_to_json(&d);
        let back = descriptor_from_json(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(descriptor_to_json(&back), text);
    }
}

#[test]
fn labels_are_written_sorted() {
    let d = MorseDescriptor::new(
        ManifoldClass::new(
            1,
            true,
            Token::from_pairs([("Zed".into(), 1), ("Alpha".into(), 2)]),
            None,
        ),
        IndexCountVector::new(1, vec![1, 1]),
    );
    let text = descriptor_to_json(&d);
    let alpha = text.find("Alpha").unwrap();
    let zed = text.find("Zed").unwrap();
    assert!(alpha < zed);
}
