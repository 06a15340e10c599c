//! The core binary word operations: φ-pairs, strong φ-catenation (all four
//! image combinations of a concatenation) and strong φ-bi-catenation (both
//! orders), plus iterated powers and φ-power recognition.

use std::collections::BTreeSet;

use crate::alphabet::Letter;
use crate::combinatorics::common_palindromic_root;
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::word::Word;

/// A canonical finite set of words: deduplicated, ordered by length then
/// letter order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSet {
    words: BTreeSet<Word>,
}

impl WordSet {
    pub fn new() -> Self {
        WordSet::default()
    }

    pub fn singleton(w: Word) -> Self {
        WordSet {
            words: BTreeSet::from([w]),
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.words.insert(w)
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn union(&self, other: &WordSet) -> WordSet {
        WordSet {
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        self.words.is_subset(&other.words)
    }

    /// Elementwise concatenation {uv : u ∈ self, v ∈ other}.
    pub fn product(&self, other: &WordSet) -> WordSet {
        let mut out = BTreeSet::new();
        for u in &self.words {
            for v in &other.words {
                out.insert(u.concat(v));
            }
        }
        WordSet { words: out }
    }

    pub fn filter_max_len(&self, max_len: usize) -> WordSet {
        WordSet {
            words: self
                .words
                .iter()
                .filter(|w| w.len() <= max_len)
                .cloned()
                .collect(),
        }
    }

    pub fn min_word_len(&self) -> Option<usize> {
        self.words.iter().map(Word::len).min()
    }
}

impl FromIterator<Word> for WordSet {
    fn from_iter<T: IntoIterator<Item = Word>>(iter: T) -> Self {
        WordSet {
            words: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::collections::btree_set::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// The φ-pair {u, φ(u)}; a singleton when u is a fixed point of φ.
pub fn phi_pair(phi: &Involution, u: &Word) -> WordSet {
    [u.clone(), phi.apply(u)].into_iter().collect()
}

/// Strong φ-catenation: {uv, uφ(v), φ(u)v, φ(u)φ(v)}.
pub fn strong_cat(phi: &Involution, u: &Word, v: &Word) -> WordSet {
    phi_pair(phi, u).product(&phi_pair(phi, v))
}

/// Strong φ-bi-catenation: both concatenation orders of the φ-pairs,
/// `u_φ v_φ ∪ v_φ u_φ`; at most 8 words.
pub fn strong_bicat(phi: &Involution, u: &Word, v: &Word) -> WordSet {
    let up = phi_pair(phi, u);
    let vp = phi_pair(phi, v);
    up.product(&vp).union(&vp.product(&up))
}

/// Iterated power: n = 0 gives {λ}, n = 1 the φ-pair, n ≥ 2 all products
/// u₁…u_n with every u_i ∈ {u, φ(u)}.
pub fn word_power(phi: &Involution, u: &Word, n: usize) -> WordSet {
    let mut acc = WordSet::singleton(Word::empty());
    let pair = phi_pair(phi, u);
    for _ in 0..n {
        acc = acc.product(&pair);
    }
    acc
}

/// Whether `w = u₁u₂…u_n` with `u₁ = u` and every later block in {u, φ(u)}.
/// Blocks have fixed length |u|, so the decomposition is unambiguous.
pub fn is_phi_power(phi: &Involution, w: &Word, base: &Word) -> Result<bool> {
    if base.is_empty() {
        return Err(Error::EmptyWord);
    }
    if w.is_empty() || w.len() % base.len() != 0 {
        return Ok(false);
    }
    let image = phi.apply(base);
    let k = base.len();
    for i in 0..w.len() / k {
        let chunk = Word::from_letters(w.letters()[i * k..(i + 1) * k].to_vec());
        if i == 0 {
            if chunk != *base {
                return Ok(false);
            }
        } else if chunk != *base && chunk != image {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Why two non-empty words strong-catenate commutatively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommuteWitness {
    SameWord,
    ThetaImage,
    PalindromicRoot(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatCommutation {
    Equal(CommuteWitness),
    NotEqual,
}

/// Decides u⊗v = v⊗u by set comparison and classifies the witness: u = v,
/// u = θ(v), or a common θ-palindromic root. Equality holds exactly when a
/// witness exists.
pub fn strong_cat_commutes(theta: &Involution, u: &Word, v: &Word) -> Result<CatCommutation> {
    theta.require_antimorphic()?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let equal = strong_cat(theta, u, v) == strong_cat(theta, v, u);
    let witness = if u == v {
        Some(CommuteWitness::SameWord)
    } else if *u == theta.apply(v) {
        Some(CommuteWitness::ThetaImage)
    } else {
        common_palindromic_root(theta, u, v)?.map(CommuteWitness::PalindromicRoot)
    };
    match (equal, witness) {
        (true, Some(w)) => Ok(CatCommutation::Equal(w)),
        (false, None) => Ok(CatCommutation::NotEqual),
        (equal, witness) => unreachable!(
            "strong catenation commutation criterion out of sync: equal={equal}, witness={witness:?}"
        ),
    }
}

/// Whether every result of u⇆φv satisfies per-pair letter-count additivity:
/// |w|_{a,φ(a)} = |u|_{a,φ(a)} + |v|_{a,φ(a)} for every letter a.
pub fn is_phi_propagating(phi: &Involution, u: &Word, v: &Word) -> bool {
    let results = strong_bicat(phi, u, v);
    let additive = |w: &Word| {
        phi.alphabet()
            .letters()
            .all(|a: Letter| phi.pair_count(w, a) == phi.pair_count(u, a) + phi.pair_count(v, a))
    };
    results.iter().all(additive)
}
