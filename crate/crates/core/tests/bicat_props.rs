//! Structural laws of the strong bi-catenation operation, checked both on
//! random pairs and exhaustively over small alphabets.

use bicat_core::bicat::{phi_pair, strong_bicat, word_power, WordSet};
use bicat_core::combinatorics::{
    conjugacy_split, primitive_root, theta_commutation_split, theta_conjugacy_split, ThetaConjugacy,
};
use bicat_core::involution::Involution;
use bicat_core::lang::words_up_to;
use bicat_core::word::Word;
use proptest::prelude::*;

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
    fn results_are_closed_under_phi_and_commutative(
        raw_u in prop::collection::vec(0u16..4, 0..=7),
        raw_v in prop::collection::vec(0u16..4, 0..=7),
    ) {
        let th = Involution::dna();
        let u = to_word(&th, &raw_u);
        let v = to_word(&th, &raw_v);
        let set = strong_bicat(&th, &u, &v);
        for x in &set {
            prop_assert!(set.contains(&th.apply(x)));
        }
        prop_assert_eq!(strong_bicat(&th, &v, &u), set.clone());
        // representative invariance: any pair of φ-pair members spans the same set
        for u1 in &phi_pair(&th, &u) {
            for v1 in &phi_pair(&th, &v) {
                prop_assert_eq!(strong_bicat(&th, u1, v1), set.clone());
            }
        }
        // length increase
        if !u.is_empty() && !v.is_empty() {
            for x in &set {
                prop_assert_eq!(x.len(), u.len() + v.len());
            }
        }
    }

    #[test]
    fn phi_propagation_always_holds(
        raw_u in prop::collection::vec(0u16..4, 0..=7),
        raw_v in prop::collection::vec(0u16..4, 0..=7),
    ) {
        let th = Involution::dna();
        let u = to_word(&th, &raw_u);
        let v = to_word(&th, &raw_v);
        prop_assert!(bicat_core::bicat::is_phi_propagating(&th, &u, &v));
    }
}

#[test]
fn associativity_sufficiency_exhaustive() {
    // if u_φw_φ = w_φu_φ then the two triple products agree; all triples of
    // non-empty words up to length 3 over both two-letter profiles
    for inv in [
        Involution::parse_inline("a<->b antimorphic").unwrap(),
        Involution::parse_inline("a->a b->b antimorphic").unwrap(),
    ] {
        let words = words_up_to(inv.alphabet(), 3, false);
        for u in &words {
            for w in &words {
                let uw = phi_pair(&inv, u).product(&phi_pair(&inv, w));
                let wu = phi_pair(&inv, w).product(&phi_pair(&inv, u));
                if uw != wu {
                    continue;
                }
                for v in &words {
                    let left: WordSet = strong_bicat(&inv, u, v)
                        .iter()
                        .flat_map(|z| strong_bicat(&inv, z, w).iter().cloned().collect::<Vec<_>>())
                        .collect();
                    let right: WordSet = strong_bicat(&inv, v, w)
                        .iter()
                        .flat_map(|z| strong_bicat(&inv, u, z).iter().cloned().collect::<Vec<_>>())
                        .collect();
                    assert_eq!(left, right, "u={u:?} v={v:?} w={w:?}");
                }
            }
        }
    }
}

#[test]
fn word_power_matches_block_characterization() {
    let th = Involution::dna();
    let u = th.alphabet().parse_word("ATC").unwrap();
    for n in 0..=4usize {
        let by_power = word_power(&th, &u, n);
        // independent oracle: enumerate all block choices directly
        let mut expected = WordSet::new();
        let pair: Vec<Word> = phi_pair(&th, &u).iter().cloned().collect();
        let mut stack = vec![(Word::empty(), 0usize)];
        while let Some((w, k)) = stack.pop() {
            if k == n {
                expected.insert(w);
                continue;
            }
            for block in &pair {
                stack.push((w.concat(block), k + 1));
            }
        }
        assert_eq!(by_power, expected, "n={n}");
    }
}

#[test]
fn decomposition_reconstruction_exhaustive() {
    // every solver output reproduces its inputs exactly; all triples over a
    // 2-letter alphabet with component lengths <= 4
    let th = Involution::parse_inline("a->a b->b antimorphic").unwrap();
    let words = words_up_to(th.alphabet(), 4, false);
    let mut conj = 0;
    let mut theta_conj = 0;
    let mut theta_comm = 0;
    for u in &words {
        for v in &words {
            let uv = u.concat(v);
            // uv = vw has a solution w iff v⁻¹(uv) exists
            if uv.starts_with(v) {
                let w = uv.suffix_from(v.len());
                if !w.is_empty() && uv == v.concat(&w) {
                    let s = conjugacy_split(u, v, &w).unwrap();
                    assert_eq!(s.x.concat(&s.y), *u);
                    assert_eq!(u.repeat(s.k).concat(&s.x), *v);
                    assert_eq!(s.y.concat(&s.x), w);
                    conj += 1;
                }
            }
            let tv = th.apply(v);
            if uv.starts_with(&tv) {
                let w = uv.suffix_from(tv.len());
                if !w.is_empty() {
                    match theta_conjugacy_split(&th, u, v, &w).unwrap() {
                        ThetaConjugacy::Split { x, y } => {
                            assert_eq!(x.concat(&y), *u);
                            assert_eq!(y.concat(&th.apply(&x)), w);
                            assert!(!x.is_empty() && !y.is_empty());
                        }
                        ThetaConjugacy::ThetaImage => assert_eq!(th.apply(&w), *u),
                    }
                    theta_conj += 1;
                }
            }
            if u.concat(v) == th.apply(v).concat(u) {
                let d = theta_commutation_split(&th, u, v).unwrap();
                assert!(th.is_theta_palindrome(&d.x).unwrap());
                assert!(th.is_theta_palindrome(&d.y).unwrap());
                assert_eq!(d.y.concat(&d.x), *v);
                assert_eq!(d.x.concat(&v.repeat(d.i)), *u);
                theta_comm += 1;
            }
        }
    }
    assert!(conj > 0 && theta_conj > 0 && theta_comm > 0);
}

#[test]
fn conjugacy_matches_rotation() {
    // uv = vw solvable iff w is a rotation of u
    let th = Involution::parse_inline("a<->b antimorphic").unwrap();
    let words = words_up_to(th.alphabet(), 4, false);
    for u in &words {
        for w in &words {
            if u.len() != w.len() {
                continue;
            }
            let rotation = u.rotations().contains(w);
            let solvable = words_up_to(th.alphabet(), u.len(), true)
                .iter()
                .any(|v| u.concat(v) == v.concat(w));
            assert_eq!(rotation, solvable, "u={u:?} w={w:?}");
        }
    }
}

#[test]
fn primitive_root_reconstructs() {
    let th = Involution::parse_inline("a<->b antimorphic").unwrap();
    for w in words_up_to(th.alphabet(), 6, false) {
        let r = primitive_root(&w).unwrap();
        assert_eq!(r.root.repeat(r.exponent), w);
        assert!(w.len() % r.root.len() == 0);
    }
}
