//! Nondeterministic finite automata over a fixed alphabet.
//!
//! The stored form is ε-free: constructions that introduce ε-transitions
//! (concatenation, plus) eliminate them before returning, then drop states
//! unreachable from the initial set. Multiple initial states are allowed.
//! Determinization, equivalence with shortest distinguishing witness, and
//! inclusion with witness are provided for the language-equation checks,
//! and the involution image / bi-catenation / iterated closure constructions
//! make the regular-language closure results effective.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter};
use crate::bicat::WordSet;
use crate::error::{Error, Result};
use crate::involution::{Involution, InvolutionKind};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
    transitions: BTreeSet<(usize, Letter, usize)>,
}

/// Outcome of a language-equality check between two automata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LangEquivalence {
    Equivalent,
    /// A shortest word accepted by exactly one side (lexicographically least
    /// among the shortest).
    Witness(Word),
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        initial: impl IntoIterator<Item = usize>,
        accepting: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, Letter, usize)>,
    ) -> Result<Self> {
        let initial: BTreeSet<usize> = initial.into_iter().collect();
        let accepting: BTreeSet<usize> = accepting.into_iter().collect();
        let transitions: BTreeSet<(usize, Letter, usize)> = transitions.into_iter().collect();
        let state_ok = |s: &usize| *s < states;
        if !initial.iter().all(state_ok) || !accepting.iter().all(state_ok) {
            return Err(Error::Parse {
                line: 0,
                message: "state id out of range".into(),
            });
        }
        for (src, letter, dst) in &transitions {
            if !state_ok(src) || !state_ok(dst) || letter.index() >= alphabet.size() {
                return Err(Error::Parse {
                    line: 0,
                    message: "transition references unknown state or letter".into(),
                });
            }
        }
        Ok(Nfa {
            alphabet,
            states,
            initial,
            accepting,
            transitions,
        })
    }

    /// The automaton of the empty language.
    pub fn empty(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            states: 1,
            initial: BTreeSet::from([0]),
            accepting: BTreeSet::new(),
            transitions: BTreeSet::new(),
        }
    }

    /// A chain accepting exactly one word.
    pub fn literal(alphabet: Alphabet, w: &Word) -> Self {
        let states = w.len() + 1;
        let transitions = w
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| (i, l, i + 1))
            .collect();
        Nfa {
            alphabet,
            states,
            initial: BTreeSet::from([0]),
            accepting: BTreeSet::from([w.len()]),
            transitions,
        }
    }

    /// A trie accepting exactly the given finite language.
    pub fn from_words(alphabet: Alphabet, words: &WordSet) -> Self {
        let mut next_child: BTreeMap<(usize, Letter), usize> = BTreeMap::new();
        let mut states = 1;
        let mut accepting = BTreeSet::new();
        for w in words {
            let mut node = 0;
            for &l in w.letters() {
                node = *next_child.entry((node, l)).or_insert_with(|| {
                    states += 1;
                    states - 1
                });
            }
            accepting.insert(node);
        }
        let transitions = next_child
            .into_iter()
            .map(|((s, l), d)| (s, l, d))
            .collect();
        Nfa {
            alphabet,
            states,
            initial: BTreeSet::from([0]),
            accepting,
            transitions,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    fn check_same_alphabet(&self, other: &Nfa) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    fn adjacency(&self) -> Vec<BTreeMap<Letter, BTreeSet<usize>>> {
        let mut adj = vec![BTreeMap::new(); self.states];
        for &(src, letter, dst) in &self.transitions {
            adj[src]
                .entry(letter)
                .or_insert_with(BTreeSet::new)
                .insert(dst);
        }
        adj
    }

    fn step(
        adj: &[BTreeMap<Letter, BTreeSet<usize>>],
        states: &BTreeSet<usize>,
        letter: Letter,
    ) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &s in states {
            if let Some(targets) = adj[s].get(&letter) {
                out.extend(targets.iter().copied());
            }
        }
        out
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let adj = self.adjacency();
        let mut cur = self.initial.clone();
        for &l in w.letters() {
            cur = Self::step(&adj, &cur, l);
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|s| self.accepting.contains(s))
    }

    /// Glues ε-transitions into the stored normal form, then trims states
    /// unreachable from the initial set. State numbering is deterministic.
    fn eliminate_eps(
        alphabet: Alphabet,
        states: usize,
        initial: BTreeSet<usize>,
        accepting: BTreeSet<usize>,
        transitions: BTreeSet<(usize, Letter, usize)>,
        eps: BTreeSet<(usize, usize)>,
    ) -> Nfa {
        let mut eps_adj = vec![Vec::new(); states];
        for &(a, b) in &eps {
            eps_adj[a].push(b);
        }
        let closure = |s: usize| -> BTreeSet<usize> {
            let mut seen = BTreeSet::from([s]);
            let mut stack = vec![s];
            while let Some(t) = stack.pop() {
                for &n in &eps_adj[t] {
                    if seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
            seen
        };
        let mut by_src: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); states];
        for &(src, letter, dst) in &transitions {
            by_src[src].push((letter, dst));
        }
        let mut new_trans = BTreeSet::new();
        let mut new_acc = BTreeSet::new();
        for s in 0..states {
            let cl = closure(s);
            if cl.iter().any(|t| accepting.contains(t)) {
                new_acc.insert(s);
            }
            for &t in &cl {
                for &(letter, dst) in &by_src[t] {
                    new_trans.insert((s, letter, dst));
                }
            }
        }
        Nfa {
            alphabet,
            states,
            initial,
            accepting: new_acc,
            transitions: new_trans,
        }
        .trimmed()
    }

    /// Drops states unreachable from the initial set, renumbering the
    /// remaining ones in ascending old-id order.
    fn trimmed(&self) -> Nfa {
        let adj = self.adjacency();
        let mut reach: BTreeSet<usize> = self.initial.clone();
        let mut stack: Vec<usize> = self.initial.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for targets in adj[s].values() {
                for &t in targets {
                    if reach.insert(t) {
                        stack.push(t);
                    }
                }
            }
        }
        if reach.is_empty() {
            return Nfa::empty(self.alphabet.clone());
        }
        let remap: BTreeMap<usize, usize> = reach
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        Nfa {
            alphabet: self.alphabet.clone(),
            states: reach.len(),
            initial: self.initial.iter().map(|s| remap[s]).collect(),
            accepting: self
                .accepting
                .iter()
                .filter_map(|s| remap.get(s).copied())
                .collect(),
            transitions: self
                .transitions
                .iter()
                .filter(|(s, _, d)| remap.contains_key(s) && remap.contains_key(d))
                .map(|&(s, l, d)| (remap[&s], l, remap[&d]))
                .collect(),
        }
    }

    pub fn union(&self, other: &Nfa) -> Result<Nfa> {
        self.check_same_alphabet(other)?;
        let shift = self.states;
        let mut transitions = self.transitions.clone();
        transitions.extend(
            other
                .transitions
                .iter()
                .map(|&(s, l, d)| (s + shift, l, d + shift)),
        );
        let mut initial = self.initial.clone();
        initial.extend(other.initial.iter().map(|s| s + shift));
        let mut accepting = self.accepting.clone();
        accepting.extend(other.accepting.iter().map(|s| s + shift));
        Ok(Nfa {
            alphabet: self.alphabet.clone(),
            states: self.states + other.states,
            initial,
            accepting,
            transitions,
        }
        .trimmed())
    }

    pub fn concat(&self, other: &Nfa) -> Result<Nfa> {
        self.check_same_alphabet(other)?;
        let shift = self.states;
        let mut transitions = self.transitions.clone();
        transitions.extend(
            other
                .transitions
                .iter()
                .map(|&(s, l, d)| (s + shift, l, d + shift)),
        );
        let eps: BTreeSet<(usize, usize)> = self
            .accepting
            .iter()
            .flat_map(|&a| other.initial.iter().map(move |&i| (a, i + shift)))
            .collect();
        Ok(Self::eliminate_eps(
            self.alphabet.clone(),
            self.states + other.states,
            self.initial.clone(),
            other.accepting.iter().map(|s| s + shift).collect(),
            transitions,
            eps,
        ))
    }

    /// One or more repetitions.
    pub fn plus(&self) -> Nfa {
        let eps: BTreeSet<(usize, usize)> = self
            .accepting
            .iter()
            .flat_map(|&a| self.initial.iter().map(move |&i| (a, i)))
            .collect();
        Self::eliminate_eps(
            self.alphabet.clone(),
            self.states,
            self.initial.clone(),
            self.accepting.clone(),
            self.transitions.clone(),
            eps,
        )
    }

    /// Zero or more repetitions: plus-closure with a fresh λ-accepting state.
    pub fn star(&self) -> Nfa {
        let p = self.plus();
        let fresh = p.states;
        let mut initial = p.initial.clone();
        initial.insert(fresh);
        let mut accepting = p.accepting.clone();
        accepting.insert(fresh);
        Nfa {
            alphabet: p.alphabet.clone(),
            states: p.states + 1,
            initial,
            accepting,
            transitions: p.transitions.clone(),
        }
    }

    pub fn reverse(&self) -> Nfa {
        Nfa {
            alphabet: self.alphabet.clone(),
            states: self.states,
            initial: self.accepting.clone(),
            accepting: self.initial.clone(),
            transitions: self
                .transitions
                .iter()
                .map(|&(s, l, d)| (d, l, s))
                .collect(),
        }
        .trimmed()
    }

    fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Nfa {
        Nfa {
            alphabet: self.alphabet.clone(),
            states: self.states,
            initial: self.initial.clone(),
            accepting: self.accepting.clone(),
            transitions: self
                .transitions
                .iter()
                .map(|&(s, l, d)| (s, f(l), d))
                .collect(),
        }
    }

    /// Accepts φ(L): relabel for a morphic φ, reverse and relabel for an
    /// antimorphic one.
    pub fn involution_image(&self, phi: &Involution) -> Nfa {
        let relabeled = self.map_letters(|l| phi.letter_image(l));
        match phi.kind() {
            InvolutionKind::Morphic => relabeled,
            InvolutionKind::Antimorphic => relabeled.reverse(),
        }
    }

    /// Accepts L(self)_φ = L ∪ φ(L).
    pub fn phi_closure(&self, phi: &Involution) -> Result<Nfa> {
        self.union(&self.involution_image(phi))
    }

    /// Accepts L(self) ⇆φ L(other) = AφBφ ∪ BφAφ.
    pub fn bicat(&self, other: &Nfa, phi: &Involution) -> Result<Nfa> {
        let a = self.phi_closure(phi)?;
        let b = other.phi_closure(phi)?;
        a.concat(&b)?.union(&b.concat(&a)?)
    }

    /// Accepts the iterative bi-catenation closure (L_φ)^+.
    pub fn iter_closure(&self, phi: &Involution) -> Result<Nfa> {
        Ok(self.phi_closure(phi)?.plus())
    }

    /// Product automaton for the intersection.
    pub fn intersect(&self, other: &Nfa) -> Result<Nfa> {
        self.check_same_alphabet(other)?;
        let adj_a = self.adjacency();
        let adj_b = other.adjacency();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut queue = VecDeque::new();
        for &a in &self.initial {
            for &b in &other.initial {
                index.entry((a, b)).or_insert_with(|| {
                    order.push((a, b));
                    queue.push_back((a, b));
                    order.len() - 1
                });
            }
        }
        let mut transitions = BTreeSet::new();
        while let Some((a, b)) = queue.pop_front() {
            let src = index[&(a, b)];
            for l in self.alphabet.letters() {
                let (Some(ta), Some(tb)) = (adj_a[a].get(&l), adj_b[b].get(&l)) else {
                    continue;
                };
                for &na in ta {
                    for &nb in tb {
                        let dst = *index.entry((na, nb)).or_insert_with(|| {
                            order.push((na, nb));
                            queue.push_back((na, nb));
                            order.len() - 1
                        });
                        transitions.insert((src, l, dst));
                    }
                }
            }
        }
        if order.is_empty() {
            return Ok(Nfa::empty(self.alphabet.clone()));
        }
        let accepting = order
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| self.accepting.contains(a) && other.accepting.contains(b))
            .map(|(i, _)| i)
            .collect();
        let initial = order
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| self.initial.contains(a) && other.initial.contains(b))
            .map(|(i, _)| i)
            .collect();
        Ok(Nfa {
            alphabet: self.alphabet.clone(),
            states: order.len(),
            initial,
            accepting,
            transitions,
        }
        .trimmed())
    }

    /// Exactly the accepted words of length at most `max_len`.
    pub fn enumerate(&self, max_len: usize) -> WordSet {
        let adj = self.adjacency();
        let mut out = WordSet::new();
        let mut prefix: Vec<Letter> = Vec::new();
        self.enum_rec(&adj, &self.initial.clone(), &mut prefix, max_len, &mut out);
        out
    }

    fn enum_rec(
        &self,
        adj: &[BTreeMap<Letter, BTreeSet<usize>>],
        current: &BTreeSet<usize>,
        prefix: &mut Vec<Letter>,
        max_len: usize,
        out: &mut WordSet,
    ) {
        if current.iter().any(|s| self.accepting.contains(s)) {
            out.insert(Word::from_letters(prefix.clone()));
        }
        if prefix.len() == max_len {
            return;
        }
        for l in self.alphabet.letters() {
            let next = Self::step(adj, current, l);
            if next.is_empty() {
                continue;
            }
            prefix.push(l);
            self.enum_rec(adj, &next, prefix, max_len, out);
            prefix.pop();
        }
    }

    pub fn is_empty_lang(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = self.initial.clone();
        let mut stack: Vec<usize> = seen.iter().copied().collect();
        while let Some(s) = stack.pop() {
            if self.accepting.contains(&s) {
                return false;
            }
            for targets in adj[s].values() {
                for &t in targets {
                    if seen.insert(t) {
                        stack.push(t);
                    }
                }
            }
        }
        true
    }

    fn determinize(&self) -> Dfa {
        let adj = self.adjacency();
        let k = self.alphabet.size();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        let start: BTreeSet<usize> = self.initial.clone();
        let start_key: Vec<usize> = start.iter().copied().collect();
        index.insert(start_key, 0);
        sets.push(start);
        queue.push_back(0);
        let mut trans: Vec<Vec<usize>> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        while let Some(id) = queue.pop_front() {
            let set = sets[id].clone();
            accepting.resize(sets.len(), false);
            accepting[id] = set.iter().any(|s| self.accepting.contains(s));
            let mut row = Vec::with_capacity(k);
            for li in 0..k {
                let l = Letter(li as u16);
                let next = Self::step(&adj, &set, l);
                let key: Vec<usize> = next.iter().copied().collect();
                let next_id = *index.entry(key).or_insert_with(|| {
                    sets.push(next);
                    queue.push_back(sets.len() - 1);
                    sets.len() - 1
                });
                row.push(next_id);
            }
            trans.resize(sets.len(), Vec::new());
            trans[id] = row;
        }
        accepting.resize(sets.len(), false);
        Dfa {
            letters: k,
            trans,
            accepting,
            start: 0,
        }
    }

    /// Decides language equality via determinization and a breadth-first
    /// product scan; on inequivalence returns the lexicographically least
    /// shortest distinguishing word.
    pub fn equivalent(&self, other: &Nfa) -> Result<LangEquivalence> {
        self.check_same_alphabet(other)?;
        let d1 = self.determinize();
        let d2 = other.determinize();
        Ok(match product_search(&d1, &d2, |a1, a2| a1 != a2) {
            Some(w) => LangEquivalence::Witness(w),
            None => LangEquivalence::Equivalent,
        })
    }

    /// If L(self) ⊈ L(other), a shortest witness in the difference.
    pub fn subset_witness(&self, other: &Nfa) -> Result<Option<Word>> {
        self.check_same_alphabet(other)?;
        let d1 = self.determinize();
        let d2 = other.determinize();
        Ok(product_search(&d1, &d2, |a1, a2| a1 && !a2))
    }

    /// Renders the structured text format:
    ///
    /// ```text
    /// alphabet: a b
    /// states: 3
    /// initial: 0
    /// accepting: 2
    /// transitions:
    /// 0 a 1
    /// 1 b 2
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("alphabet:");
        for name in self.alphabet.names() {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        out.push_str(&format!("states: {}\n", self.states));
        out.push_str("initial:");
        for s in &self.initial {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
        out.push_str("accepting:");
        for s in &self.accepting {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
        out.push_str("transitions:\n");
        for (src, letter, dst) in &self.transitions {
            out.push_str(&format!("{src} {} {dst}\n", self.alphabet.name(*letter)));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Nfa> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let mut next_field = |prefix: &str| -> Result<(usize, String)> {
            for (no, line) in lines.by_ref() {
                if line.is_empty() {
                    continue;
                }
                return line
                    .strip_prefix(prefix)
                    .map(|rest| (no, rest.trim().to_string()))
                    .ok_or_else(|| Error::Parse {
                        line: no,
                        message: format!("expected `{prefix}`"),
                    });
            }
            Err(Error::Parse {
                line: 0,
                message: format!("missing `{prefix}` field"),
            })
        };
        let (no, alpha) = next_field("alphabet:")?;
        let alphabet = Alphabet::new(alpha.split_whitespace()).map_err(|e| Error::Parse {
            line: no,
            message: e.to_string(),
        })?;
        let (no, states) = next_field("states:")?;
        let states: usize = states.parse().map_err(|_| Error::Parse {
            line: no,
            message: "invalid state count".into(),
        })?;
        let parse_ids = |no: usize, text: &str| -> Result<Vec<usize>> {
            text.split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: no,
                        message: format!("invalid state id `{t}`"),
                    })
                })
                .collect()
        };
        let (no, initial) = next_field("initial:")?;
        let initial = parse_ids(no, &initial)?;
        let (no, accepting) = next_field("accepting:")?;
        let accepting = parse_ids(no, &accepting)?;
        let (_, rest) = next_field("transitions:")?;
        if !rest.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "transitions must start on the following line".into(),
            });
        }
        let mut transitions = Vec::new();
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [src, letter, dst] = parts.as_slice() else {
                return Err(Error::Parse {
                    line: no,
                    message: "expected `src letter dst`".into(),
                });
            };
            let src = src.parse::<usize>().map_err(|_| Error::Parse {
                line: no,
                message: format!("invalid state id `{src}`"),
            })?;
            let dst = dst.parse::<usize>().map_err(|_| Error::Parse {
                line: no,
                message: format!("invalid state id `{dst}`"),
            })?;
            let letter = alphabet.letter(letter).map_err(|e| Error::Parse {
                line: no,
                message: e.to_string(),
            })?;
            transitions.push((src, letter, dst));
        }
        Nfa::new(alphabet, states, initial, accepting, transitions)
    }
}

struct Dfa {
    letters: usize,
    trans: Vec<Vec<usize>>,
    accepting: Vec<bool>,
    start: usize,
}

/// Backpointer of a product state: predecessor pair and the letter taken.
type SearchParent = Option<((usize, usize), Letter)>;

/// BFS over the product of two total DFAs; returns the lexicographically
/// least shortest word leading to a state pair satisfying `hit`.
fn product_search(d1: &Dfa, d2: &Dfa, hit: impl Fn(bool, bool) -> bool) -> Option<Word> {
    let mut seen: HashMap<(usize, usize), SearchParent> = HashMap::new();
    let mut queue = VecDeque::new();
    let start = (d1.start, d2.start);
    seen.insert(start, None);
    queue.push_back(start);
    while let Some((s1, s2)) = queue.pop_front() {
        if hit(d1.accepting[s1], d2.accepting[s2]) {
            let mut letters = Vec::new();
            let mut cur = (s1, s2);
            while let Some(Some((prev, l))) = seen.get(&cur) {
                letters.push(*l);
                cur = *prev;
            }
            letters.reverse();
            return Some(Word::from_letters(letters));
        }
        for li in 0..d1.letters {
            let l = Letter(li as u16);
            let next = (d1.trans[s1][li], d2.trans[s2][li]);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(next) {
                e.insert(Some(((s1, s2), l)));
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::{lang_bicat, words_up_to};

    fn swap() -> Involution {
        Involution::parse_inline("a<->b antimorphic").unwrap()
    }

    fn set(inv: &Involution, words: &[&str]) -> WordSet {
        words
            .iter()
            .map(|s| inv.alphabet().parse_word(s).unwrap())
            .collect()
    }

    #[test]
    fn trie_accepts_exactly_the_language() {
        let th = swap();
        let l = set(&th, &["a", "ab"]);
        let nfa = Nfa::from_words(th.alphabet().clone(), &l);
        assert_eq!(nfa.enumerate(2), l);
        let empty = Nfa::empty(th.alphabet().clone());
        assert!(empty.is_empty_lang());
        assert_eq!(empty.enumerate(5), WordSet::new());
    }

    #[test]
    fn involution_images() {
        let th = swap();
        let nfa = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        // θ(ab) = ab under the antimorphic swap
        assert_eq!(nfa.involution_image(&th).enumerate(3), set(&th, &["ab"]));
        let mu = Involution::parse_inline("a<->b morphic").unwrap();
        assert_eq!(nfa.involution_image(&mu).enumerate(3), set(&mu, &["ba"]));
        assert!(Nfa::empty(th.alphabet().clone())
            .involution_image(&th)
            .is_empty_lang());
    }

    #[test]
    fn bicat_matches_finite_computation() {
        let dna = Involution::dna();
        let a = Nfa::from_words(dna.alphabet().clone(), &set(&dna, &["ATC"]));
        let b = Nfa::from_words(dna.alphabet().clone(), &set(&dna, &["GCTA"]));
        let built = a.bicat(&b, &dna).unwrap();
        assert_eq!(
            built.enumerate(7),
            lang_bicat(&dna, &set(&dna, &["ATC"]), &set(&dna, &["GCTA"]))
        );
        let th = swap();
        let ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        assert_eq!(
            ab.bicat(&ab, &th).unwrap().enumerate(6),
            set(&th, &["abab"])
        );
        let empty = Nfa::empty(dna.alphabet().clone());
        assert!(empty.bicat(&a, &dna).unwrap().is_empty_lang());
    }

    #[test]
    fn iterated_closure_is_plus_of_phi_closure() {
        let th = swap();
        let ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        let closed = ab.iter_closure(&th).unwrap();
        assert_eq!(
            closed.enumerate(8),
            set(&th, &["ab", "abab", "ababab", "abababab"])
        );
        assert!(Nfa::empty(th.alphabet().clone())
            .iter_closure(&th)
            .unwrap()
            .is_empty_lang());
    }

    #[test]
    fn dna_closure_matches_block_characterization() {
        let dna = Involution::dna();
        let atc = dna.alphabet().parse_word("ATC").unwrap();
        let gat = dna.alphabet().parse_word("GAT").unwrap();
        let closure = Nfa::from_words(dna.alphabet().clone(), &WordSet::singleton(atc.clone()))
            .iter_closure(&dna)
            .unwrap();
        // independent oracle: fixed-length block scan over {ATC, GAT}
        let is_block_word = |w: &Word| {
            !w.is_empty()
                && w.len() % 3 == 0
                && (0..w.len() / 3).all(|i| {
                    let chunk = Word::from_letters(w.letters()[3 * i..3 * (i + 1)].to_vec());
                    chunk == atc || chunk == gat
                })
        };
        for w in words_up_to(dna.alphabet(), 7, true) {
            assert_eq!(closure.accepts(&w), is_block_word(&w), "{w:?}");
        }
    }

    #[test]
    fn equivalence_and_witnesses() {
        let th = swap();
        let ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        assert_eq!(
            ab.equivalent(&ab.involution_image(&th)).unwrap(),
            LangEquivalence::Equivalent
        );
        let a = Nfa::from_words(th.alphabet().clone(), &set(&th, &["a"]));
        let b = Nfa::from_words(th.alphabet().clone(), &set(&th, &["b"]));
        assert_eq!(
            a.equivalent(&b).unwrap(),
            LangEquivalence::Witness(th.alphabet().parse_word("a").unwrap())
        );
        // (ab)+ built two ways
        let closed = ab.iter_closure(&th).unwrap();
        let hand = Nfa::new(
            th.alphabet().clone(),
            3,
            [0],
            [2],
            [
                (0, th.alphabet().letter("a").unwrap(), 1),
                (1, th.alphabet().letter("b").unwrap(), 2),
                (2, th.alphabet().letter("a").unwrap(), 1),
            ],
        )
        .unwrap();
        assert_eq!(
            closed.equivalent(&hand).unwrap(),
            LangEquivalence::Equivalent
        );
    }

    #[test]
    fn subset_witnesses() {
        let th = swap();
        let ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        let plus = ab.iter_closure(&th).unwrap();
        assert_eq!(ab.subset_witness(&plus).unwrap(), None);
        let w = plus.subset_witness(&ab).unwrap().unwrap();
        assert_eq!(w, th.alphabet().parse_word("abab").unwrap());
    }

    #[test]
    fn enumerate_agrees_with_accepts() {
        let th = swap();
        let l = set(&th, &["a", "ba", "aab"]);
        let nfa = Nfa::from_words(th.alphabet().clone(), &l)
            .iter_closure(&th)
            .unwrap();
        let listed = nfa.enumerate(4);
        for w in words_up_to(th.alphabet(), 4, true) {
            assert_eq!(listed.contains(&w), nfa.accepts(&w));
        }
    }

    #[test]
    fn intersection() {
        let th = swap();
        let plus_ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]))
            .iter_closure(&th)
            .unwrap();
        let up_to_two_blocks = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab", "abab"]));
        let inter = plus_ab.intersect(&up_to_two_blocks).unwrap();
        assert_eq!(inter.enumerate(6), set(&th, &["ab", "abab"]));
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let th = swap();
        let nfa = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab", "ba"]))
            .iter_closure(&th)
            .unwrap();
        let text = nfa.to_text();
        let parsed = Nfa::from_text(&text).unwrap();
        assert_eq!(parsed, nfa);
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn star_includes_lambda() {
        let th = swap();
        let ab = Nfa::from_words(th.alphabet().clone(), &set(&th, &["ab"]));
        let star = ab.star();
        assert!(star.accepts(&Word::empty()));
        assert_eq!(star.enumerate(4), set(&th, &["_", "ab", "abab"]));
    }
}
