//! Dual-path agreement between the finite-set language operations and the
//! NFA constructions, plus closure-transfer properties.

use bicat_core::bicat::{strong_bicat, WordSet};
use bicat_core::involution::Involution;
use bicat_core::lang::{
    closure_layers, iterative_closure_truncated, lang_bicat, lang_power, plus_closure_truncated,
    words_up_to,
};
use bicat_core::nfa::{LangEquivalence, Nfa};
use bicat_core::predicate::{closed_check, ClosedCheck, LangPredicate};
use bicat_core::word::Word;

fn profiles() -> Vec<Involution> {
    vec![
        Involution::parse_inline("a<->b antimorphic").unwrap(),
        Involution::parse_inline("a->a b->b antimorphic").unwrap(),
    ]
}

fn subsets_of(words: &[Word], max_size: usize) -> Vec<WordSet> {
    let mut out = vec![WordSet::new()];
    if max_size >= 1 {
        for w in words {
            out.push(WordSet::singleton(w.clone()));
        }
    }
    if max_size >= 2 {
        for (i, w1) in words.iter().enumerate() {
            for w2 in &words[i + 1..] {
                out.push([w1.clone(), w2.clone()].into_iter().collect());
            }
        }
    }
    out
}

#[test]
fn finite_and_nfa_bicat_agree() {
    for inv in profiles() {
        let words = words_up_to(inv.alphabet(), 2, true);
        let langs = subsets_of(&words, 2);
        for l1 in &langs {
            let a = Nfa::from_words(inv.alphabet().clone(), l1);
            for l2 in &langs {
                let b = Nfa::from_words(inv.alphabet().clone(), l2);
                let direct = lang_bicat(&inv, l1, l2);
                let via_nfa = a.bicat(&b, &inv).unwrap().enumerate(4);
                assert_eq!(direct, via_nfa);
            }
        }
    }
}

#[test]
fn power_addition_small() {
    for inv in profiles() {
        let words = words_up_to(inv.alphabet(), 2, false);
        for l in subsets_of(&words, 2) {
            for n in 0..=3usize {
                for m in 0..=(3 - n) {
                    let left = lang_bicat(&inv, &lang_power(&inv, &l, n), &lang_power(&inv, &l, m));
                    let right = lang_power(&inv, &l, n + m);
                    assert_eq!(left, right, "n={n} m={m}");
                }
            }
        }
    }
}

#[test]
fn plus_closure_is_closed_under_bicat() {
    let bound = 8;
    for inv in profiles() {
        let words = words_up_to(inv.alphabet(), 2, false);
        for l in subsets_of(&words, 2) {
            if l.is_empty() {
                continue;
            }
            let closure = plus_closure_truncated(&inv, &l, bound).unwrap();
            for u in &closure {
                for v in &closure {
                    for w in &strong_bicat(&inv, u, v) {
                        if w.len() <= bound {
                            assert!(closure.contains(w), "u={u:?} v={v:?} w={w:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn closure_transfer_to_reverse_and_image() {
    let bound = 5;
    for inv in profiles() {
        let a = inv.alphabet().letter("a").unwrap();
        let b = inv.alphabet().letter("b").unwrap();
        let seed: WordSet = [inv.alphabet().parse_word("ab").unwrap()]
            .into_iter()
            .collect();
        let closed_nfa = Nfa::from_words(inv.alphabet().clone(), &seed)
            .iter_closure(&inv)
            .unwrap();
        // for the automaton sample, build the reverse and image automata
        // structurally and recheck those
        for transformed in [closed_nfa.reverse(), closed_nfa.involution_image(&inv)] {
            assert_eq!(
                closed_check(&inv, &LangPredicate::Automaton(transformed), bound),
                ClosedCheck::Closed
            );
        }
        let langs = vec![
            LangPredicate::CountEq(a, b),
            LangPredicate::Automaton(closed_nfa),
        ];
        for l in langs {
            assert_eq!(closed_check(&inv, &l, bound), ClosedCheck::Closed);
            let rev = LangPredicate::Reversal(Box::new(l.clone()));
            assert_eq!(closed_check(&inv, &rev, bound), ClosedCheck::Closed);
            let img = LangPredicate::Image(Box::new(l.clone()));
            assert_eq!(closed_check(&inv, &img, bound), ClosedCheck::Closed);
            // catenation closure
            let members: Vec<Word> = words_up_to(inv.alphabet(), bound, false)
                .into_iter()
                .filter(|w| l.member(&inv, w))
                .collect();
            for u in &members {
                for v in &members {
                    assert!(l.member(&inv, &u.concat(v)));
                }
            }
        }
    }
}

#[test]
fn intersection_of_closed_languages_is_closed() {
    let inv = Involution::parse_inline("a<->b c->c antimorphic").unwrap();
    let a = inv.alphabet().letter("a").unwrap();
    let b = inv.alphabet().letter("b").unwrap();
    let c = inv.alphabet().letter("c").unwrap();
    let l1 = LangPredicate::CountSumEq(a, b, c);
    let l2 = LangPredicate::CountAllEq(a, b, c);
    let inter = LangPredicate::Intersection(Box::new(l1), Box::new(l2));
    assert_eq!(closed_check(&inv, &inter, 4), ClosedCheck::Closed);
}

#[test]
fn iterative_closure_three_routes_agree() {
    let bound = 6;
    for inv in profiles() {
        let words = words_up_to(inv.alphabet(), 2, false);
        for l in subsets_of(&words, 2) {
            if l.is_empty() {
                continue;
            }
            let by_layers = iterative_closure_truncated(&inv, &l, bound).unwrap();
            let by_plus = plus_closure_truncated(&inv, &l, bound).unwrap();
            assert_eq!(by_layers, by_plus);
            let by_nfa = Nfa::from_words(inv.alphabet().clone(), &l)
                .iter_closure(&inv)
                .unwrap()
                .enumerate(bound);
            assert_eq!(by_layers, by_nfa);
        }
    }
}

#[test]
fn layer_union_matches_full_closure() {
    let inv = Involution::parse_inline("a<->b antimorphic").unwrap();
    let l: WordSet = [inv.alphabet().parse_word("ab").unwrap()]
        .into_iter()
        .collect();
    let layers = closure_layers(&inv, &l, 4, 10).unwrap();
    let union = layers.iter().fold(WordSet::new(), |acc, l| acc.union(l));
    assert_eq!(union, iterative_closure_truncated(&inv, &l, 10).unwrap());
}

#[test]
fn nfa_closure_equivalent_to_handbuilt() {
    let inv = Involution::parse_inline("a<->b antimorphic").unwrap();
    let l: WordSet = [inv.alphabet().parse_word("ab").unwrap()]
        .into_iter()
        .collect();
    let closure = Nfa::from_words(inv.alphabet().clone(), &l)
        .iter_closure(&inv)
        .unwrap();
    let a = inv.alphabet().letter("a").unwrap();
    let b = inv.alphabet().letter("b").unwrap();
    let hand = Nfa::new(
        inv.alphabet().clone(),
        3,
        [0],
        [2],
        [(0, a, 1), (1, b, 2), (2, a, 1)],
    )
    .unwrap();
    assert_eq!(
        closure.equivalent(&hand).unwrap(),
        LangEquivalence::Equivalent
    );
}
