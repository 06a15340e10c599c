//! Algebraic laws of (anti)morphic involutions on random words.

use bicat_core::involution::{Involution, InvolutionKind};
use bicat_core::word::Word;
use proptest::prelude::*;

fn involutions() -> Vec<Involution> {
    vec![
        Involution::dna(),
        Involution::parse_inline("a<->b antimorphic").unwrap(),
        Involution::parse_inline("a->a b->b antimorphic").unwrap(),
        Involution::parse_inline("a<->b morphic").unwrap(),
        Involution::parse_inline("a<->b c->c antimorphic").unwrap(),
    ]
}

fn to_word(inv: &Involution, indices: &[u16]) -> Word {
    let letters: Vec<_> = inv.alphabet().letters().collect();
    Word::from_letters(
        indices
            .iter()
            .map(|&i| letters[i as usize % letters.len()])
            .collect(),
    )
}

proptest! {
    #[test]
    fn involution_applied_twice_is_identity(
        raw in prop::collection::vec(0u16..4, 0..=12),
        pick in 0usize..5,
    ) {
        let inv = &involutions()[pick];
        let w = to_word(inv, &raw);
        prop_assert_eq!(inv.apply(&inv.apply(&w)), w);
    }

    #[test]
    fn involution_preserves_length_and_counts(
        raw in prop::collection::vec(0u16..4, 0..=12),
        pick in 0usize..5,
    ) {
        let inv = &involutions()[pick];
        let w = to_word(inv, &raw);
        let image = inv.apply(&w);
        prop_assert_eq!(image.len(), w.len());
        for a in inv.alphabet().letters() {
            // |φ(w)|_a = |w|_{φ(a)}
            prop_assert_eq!(image.count(a), w.count(inv.letter_image(a)));
        }
    }

    #[test]
    fn morphism_and_antimorphism_laws(
        raw_u in prop::collection::vec(0u16..4, 0..=8),
        raw_v in prop::collection::vec(0u16..4, 0..=8),
        pick in 0usize..5,
    ) {
        let inv = &involutions()[pick];
        let u = to_word(inv, &raw_u);
        let v = to_word(inv, &raw_v);
        let uv = u.concat(&v);
        match inv.kind() {
            InvolutionKind::Morphic => {
                prop_assert_eq!(inv.apply(&uv), inv.apply(&u).concat(&inv.apply(&v)));
            }
            InvolutionKind::Antimorphic => {
                prop_assert_eq!(inv.apply(&uv), inv.apply(&v).concat(&inv.apply(&u)));
            }
        }
    }
}
