//! Language-level bi-catenation on exact finite sets: powers, truncated
//! plus-closure, and the layered iterative closure.
//!
//! All truncations are exact: every word of the untruncated object up to the
//! stated length bound is present. This is sound because all operations are
//! length-additive and closure inputs exclude the empty word.

use crate::alphabet::Alphabet;
use crate::bicat::{strong_bicat, WordSet};
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::word::Word;

/// L ∪ φ(L).
pub fn lang_phi(phi: &Involution, l: &WordSet) -> WordSet {
    let image: WordSet = l.iter().map(|w| phi.apply(w)).collect();
    l.union(&image)
}

/// Union of u⇆φv over all pairs; equals `L1_φ L2_φ ∪ L2_φ L1_φ`.
pub fn lang_bicat(phi: &Involution, l1: &WordSet, l2: &WordSet) -> WordSet {
    let mut out = WordSet::new();
    for u in l1 {
        for v in l2 {
            for w in &strong_bicat(phi, u, v) {
                out.insert(w.clone());
            }
        }
    }
    out
}

/// The iterated operation: base `L1 ⇆⁰ L2 = L1_φ ∪ L2_φ`, then
/// `L1 ⇆ⁱ L2 = (L1 ⇆^{i-1} L2) ⇆ L2`.
pub fn lang_iterated(phi: &Involution, l1: &WordSet, l2: &WordSet, i: usize) -> WordSet {
    let mut acc = lang_phi(phi, l1).union(&lang_phi(phi, l2));
    for _ in 0..i {
        acc = lang_bicat(phi, &acc, l2);
    }
    acc
}

/// The n-th power: {λ} for n = 0, L_φ for n = 1, all n-fold products of
/// L_φ-words for n ≥ 2.
pub fn lang_power(phi: &Involution, l: &WordSet, n: usize) -> WordSet {
    if n == 0 {
        return WordSet::singleton(Word::empty());
    }
    let base = lang_phi(phi, l);
    let mut acc = base.clone();
    for _ in 1..n {
        acc = acc.product(&base);
    }
    acc
}

/// All words of ⋃_{k≥1} L^(k) of length at most `max_len`; exact because
/// words are non-empty, so longer factors only produce longer products.
pub fn plus_closure_truncated(phi: &Involution, l: &WordSet, max_len: usize) -> Result<WordSet> {
    if l.iter().any(Word::is_empty) {
        return Err(Error::EmptyWordInLanguage);
    }
    let base = lang_phi(phi, l).filter_max_len(max_len);
    let mut acc = base.clone();
    let mut frontier = base.clone();
    while !frontier.is_empty() {
        let mut next = WordSet::new();
        for u in &frontier {
            for v in &base {
                if u.len() + v.len() <= max_len {
                    let w = u.concat(v);
                    if !acc.contains(&w) {
                        next.insert(w);
                    }
                }
            }
        }
        for w in &next {
            acc.insert(w.clone());
        }
        frontier = next;
    }
    Ok(acc)
}

/// Layers L₀..L_n of the iterative closure: L₀ = L_φ and
/// L_i = {words of u⇆φv : u, v ∈ ⋃_{k<i} L_k}, each truncated to `max_len`.
pub fn closure_layers(
    phi: &Involution,
    l: &WordSet,
    n: usize,
    max_len: usize,
) -> Result<Vec<WordSet>> {
    if l.iter().any(Word::is_empty) {
        return Err(Error::EmptyWordInLanguage);
    }
    let mut layers = vec![lang_phi(phi, l).filter_max_len(max_len)];
    let mut pool = layers[0].clone();
    for _ in 1..=n {
        let layer = lang_bicat(phi, &pool, &pool).filter_max_len(max_len);
        pool = pool.union(&layer);
        layers.push(layer);
    }
    Ok(layers)
}

/// The full truncated iterative closure: union of layers run to fixpoint.
pub fn iterative_closure_truncated(
    phi: &Involution,
    l: &WordSet,
    max_len: usize,
) -> Result<WordSet> {
    if l.iter().any(Word::is_empty) {
        return Err(Error::EmptyWordInLanguage);
    }
    let mut pool = lang_phi(phi, l).filter_max_len(max_len);
    loop {
        let next = pool.union(&lang_bicat(phi, &pool, &pool).filter_max_len(max_len));
        if next == pool {
            return Ok(pool);
        }
        pool = next;
    }
}

/// One word per line, `_` for the empty word.
pub fn words_to_text(alphabet: &Alphabet, l: &WordSet) -> String {
    let mut out = String::new();
    for w in l {
        out.push_str(&alphabet.format_word(w));
        out.push('\n');
    }
    out
}

pub fn words_from_text(alphabet: &Alphabet, text: &str) -> Result<WordSet> {
    let mut out = WordSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let w = alphabet.parse_word(line).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.insert(w);
    }
    Ok(out)
}

/// All words over the alphabet with length in `min_len..=max_len`,
/// shortlex order.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize, include_empty: bool) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    if include_empty {
        out.push(Word::empty());
    }
    let mut level = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * alphabet.size());
        for w in &level {
            for l in alphabet.letters() {
                next.push(w.concat(&Word::from_letters(vec![l])));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::involution::InvolutionKind;

    fn swap() -> Involution {
        Involution::new(
            Alphabet::new(["a", "b"]).unwrap(),
            &[("a", "b")],
            InvolutionKind::Antimorphic,
        )
        .unwrap()
    }

    fn set(inv: &Involution, words: &[&str]) -> WordSet {
        words
            .iter()
            .map(|s| inv.alphabet().parse_word(s).unwrap())
            .collect()
    }

    #[test]
    fn phi_closure_of_language() {
        let th = swap();
        assert_eq!(lang_phi(&th, &set(&th, &["ab"])), set(&th, &["ab"]));
        let dna = Involution::dna();
        assert_eq!(
            lang_phi(&dna, &set(&dna, &["ATC"])),
            set(&dna, &["ATC", "GAT"])
        );
        assert_eq!(lang_phi(&th, &WordSet::new()), WordSet::new());
    }

    #[test]
    fn language_bicat() {
        let th = swap();
        assert_eq!(
            lang_bicat(&th, &set(&th, &["ab"]), &set(&th, &["ab"])),
            set(&th, &["abab"])
        );
        assert_eq!(
            lang_bicat(&th, &WordSet::new(), &set(&th, &["ab"])),
            WordSet::new()
        );
        let dna = Involution::dna();
        assert_eq!(
            lang_bicat(&dna, &set(&dna, &["ATC"]), &set(&dna, &["GCTA"])),
            set(
                &dna,
                &[
                    "ATCGCTA", "ATCTAGC", "GATGCTA", "GATTAGC", "GCTAATC", "GCTAGAT", "TAGCATC",
                    "TAGCGAT"
                ]
            )
        );
    }

    #[test]
    fn language_powers() {
        let th = swap();
        assert_eq!(lang_power(&th, &set(&th, &["ab"]), 2), set(&th, &["abab"]));
        assert_eq!(lang_power(&th, &set(&th, &["ab"]), 0), set(&th, &["_"]));
        let dna = Involution::dna();
        assert_eq!(
            lang_power(&dna, &set(&dna, &["ATC"]), 2),
            set(&dna, &["ATCATC", "ATCGAT", "GATATC", "GATGAT"])
        );
    }

    #[test]
    fn truncated_plus_closure() {
        let th = swap();
        assert_eq!(
            plus_closure_truncated(&th, &set(&th, &["ab"]), 8).unwrap(),
            set(&th, &["ab", "abab", "ababab", "abababab"])
        );
        let unary = Involution::new(
            Alphabet::new(["a"]).unwrap(),
            &[("a", "a")],
            InvolutionKind::Morphic,
        )
        .unwrap();
        assert_eq!(
            plus_closure_truncated(&unary, &set(&unary, &["a"]), 3).unwrap(),
            set(&unary, &["a", "aa", "aaa"])
        );
        let dna = Involution::dna();
        assert_eq!(
            plus_closure_truncated(&dna, &set(&dna, &["AT"]), 4).unwrap(),
            set(&dna, &["AT", "ATAT"])
        );
        assert_eq!(
            plus_closure_truncated(&th, &set(&th, &["_"]), 3).unwrap_err(),
            Error::EmptyWordInLanguage
        );
    }

    #[test]
    fn closure_layer_sequence() {
        let th = swap();
        let layers = closure_layers(&th, &set(&th, &["ab"]), 2, 10).unwrap();
        assert_eq!(layers[0], set(&th, &["ab"]));
        assert_eq!(layers[1], set(&th, &["abab"]));
        assert_eq!(layers[2], set(&th, &["abab", "ababab", "abababab"]));

        let layers = closure_layers(&th, &set(&th, &["ab"]), 3, 12).unwrap();
        assert_eq!(
            layers[3],
            set(
                &th,
                &["abab", "ababab", "abababab", "ababababab", "abababababab"]
            )
        );

        let layers = closure_layers(&th, &set(&th, &["ab"]), 0, 10).unwrap();
        assert_eq!(layers, vec![set(&th, &["ab"])]);
    }

    #[test]
    fn words_file_round_trip() {
        let th = swap();
        let l = set(&th, &["_", "a", "ab", "ba"]);
        let text = words_to_text(th.alphabet(), &l);
        assert_eq!(words_from_text(th.alphabet(), &text).unwrap(), l);
        assert_eq!(
            words_to_text(
                th.alphabet(),
                &words_from_text(th.alphabet(), &text).unwrap()
            ),
            text
        );
    }

    #[test]
    fn word_enumeration_is_shortlex() {
        let alpha = Alphabet::new(["a", "b"]).unwrap();
        let words = words_up_to(&alpha, 2, true);
        let rendered: Vec<String> = words.iter().map(|w| alpha.format_word(w)).collect();
        assert_eq!(rendered, ["_", "a", "b", "aa", "ab", "ba", "bb"]);
    }
}
