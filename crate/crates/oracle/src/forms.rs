//! Structural templates arising as conclusions of the conjugacy and
//! language-equation results: a matcher (exhaustive parameter search,
//! complete for the given inputs) and a generator (all instances within
//! bounds) per family.

use bicat_core::combinatorics::primitive_root;
use bicat_core::lang::words_up_to;
use bicat_core::{Alphabet, Involution, Word};

use crate::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormFamily {
    /// Tuple (x, y): both powers of one common word.
    PowersOfCommonWord,
    /// Tuple (x, y): both powers of one common θ-palindrome.
    PowersOfCommonPalindrome,
    /// Tuple (u, v, w): u = xy, v = (xy)^k x, w = yx with x non-empty.
    ConjSplit,
    /// Tuple (u, v, w): same split with x, y θ-palindromes (possibly empty).
    PalinConjSplit,
    /// Tuple (u, v, w): with s = tθ(t), u = θ(t)s^k, v = s^n t, w = s^k t.
    SkewPower,
    /// Tuple (v, w): v = γw with γ a θ-palindrome.
    PalPrefix,
    /// Tuple (u, v): u = (xy)^i, v = (yx)^i; the language side
    /// {x(yx)^j : j ≥ 0} is checked by the callers.
    ChainLang,
}

impl FormFamily {
    pub fn name(self) -> &'static str {
        match self {
            FormFamily::PowersOfCommonWord => "powers-of-common-word",
            FormFamily::PowersOfCommonPalindrome => "powers-of-common-palindrome",
            FormFamily::ConjSplit => "conj-split",
            FormFamily::PalinConjSplit => "palin-conj-split",
            FormFamily::SkewPower => "skew-power",
            FormFamily::PalPrefix => "pal-prefix",
            FormFamily::ChainLang => "chain-lang",
        }
    }
}

/// One satisfying parameter assignment, rendered deterministically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatch {
    pub family: FormFamily,
    pub params: Vec<(&'static str, String)>,
}

impl FormMatch {
    pub fn describe(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{}({params})", self.family.name())
    }
}

fn fmt(alpha: &Alphabet, w: &Word) -> String {
    alpha.format_word(w)
}

fn is_pal(theta: &Involution, w: &Word) -> bool {
    theta.is_theta_palindrome(w).unwrap_or(false)
}

/// Decides whether the word tuple fits the template for some parameters;
/// search is exhaustive over factorizations, so it is complete for the
/// given inputs.
pub fn match_form(
    family: FormFamily,
    theta: &Involution,
    words: &[Word],
) -> Result<Option<FormMatch>, OracleError> {
    let alpha = theta.alphabet();
    let found = match family {
        FormFamily::PowersOfCommonWord | FormFamily::PowersOfCommonPalindrome => {
            let [x, y] = words else {
                return Err(OracleError::BadArity {
                    family: family.name(),
                    expected: 2,
                });
            };
            common_power_pair(theta, x, y, family == FormFamily::PowersOfCommonPalindrome).map(
                |(root, i, k)| FormMatch {
                    family,
                    params: vec![
                        ("s", fmt(alpha, &root)),
                        ("i", i.to_string()),
                        ("k", k.to_string()),
                    ],
                },
            )
        }
        FormFamily::ConjSplit | FormFamily::PalinConjSplit => {
            let [u, v, w] = words else {
                return Err(OracleError::BadArity {
                    family: family.name(),
                    expected: 3,
                });
            };
            let palindromic = family == FormFamily::PalinConjSplit;
            conj_split(theta, u, v, w, palindromic).map(|(x, y, k)| FormMatch {
                family,
                params: vec![
                    ("x", fmt(alpha, &x)),
                    ("y", fmt(alpha, &y)),
                    ("i", k.to_string()),
                ],
            })
        }
        FormFamily::SkewPower => {
            let [u, v, w] = words else {
                return Err(OracleError::BadArity {
                    family: family.name(),
                    expected: 3,
                });
            };
            skew_power(theta, u, v, Some(w)).map(|(t, k, n)| FormMatch {
                family,
                params: vec![
                    ("t", fmt(alpha, &t)),
                    ("k", k.to_string()),
                    ("n", n.to_string()),
                ],
            })
        }
        FormFamily::PalPrefix => {
            let [v, w] = words else {
                return Err(OracleError::BadArity {
                    family: family.name(),
                    expected: 2,
                });
            };
            pal_prefix(theta, v, w).map(|gamma| FormMatch {
                family,
                params: vec![("gamma", fmt(alpha, &gamma))],
            })
        }
        FormFamily::ChainLang => {
            let [u, v] = words else {
                return Err(OracleError::BadArity {
                    family: family.name(),
                    expected: 2,
                });
            };
            chain_candidates(u, v)
                .into_iter()
                .next()
                .map(|(x, y, i)| FormMatch {
                    family,
                    params: vec![
                        ("x", fmt(alpha, &x)),
                        ("y", fmt(alpha, &y)),
                        ("i", i.to_string()),
                    ],
                })
        }
    };
    Ok(found)
}

/// Emits every instance of the template with parameter words up to
/// `max_param_len` and exponents up to `max_exp`, tagged with its
/// parameters. No duplicates.
pub fn gen_family(
    family: FormFamily,
    theta: &Involution,
    max_param_len: usize,
    max_exp: usize,
) -> Result<Vec<(Vec<Word>, FormMatch)>, OracleError> {
    let alpha = theta.alphabet();
    let words = words_up_to(alpha, max_param_len, true);
    let nonempty: Vec<&Word> = words.iter().filter(|w| !w.is_empty()).collect();
    let mut out: Vec<(Vec<Word>, FormMatch)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |tuple: Vec<Word>, m: FormMatch| {
        if seen.insert((tuple.clone(), m.describe())) {
            out.push((tuple, m));
        }
    };
    match family {
        FormFamily::PowersOfCommonWord | FormFamily::PowersOfCommonPalindrome => {
            for s in &nonempty {
                if family == FormFamily::PowersOfCommonPalindrome && !is_pal(theta, s) {
                    continue;
                }
                for i in 1..=max_exp {
                    for k in 1..=max_exp {
                        push(
                            vec![s.repeat(i), s.repeat(k)],
                            FormMatch {
                                family,
                                params: vec![
                                    ("s", fmt(alpha, s)),
                                    ("i", i.to_string()),
                                    ("k", k.to_string()),
                                ],
                            },
                        );
                    }
                }
            }
        }
        FormFamily::ConjSplit | FormFamily::PalinConjSplit => {
            let palindromic = family == FormFamily::PalinConjSplit;
            for x in &words {
                for y in &words {
                    if x.is_empty() && y.is_empty() {
                        continue;
                    }
                    if !palindromic && x.is_empty() {
                        continue;
                    }
                    if palindromic && !(is_pal(theta, x) && is_pal(theta, y)) {
                        continue;
                    }
                    let u = x.concat(y);
                    let w = y.concat(x);
                    for k in 0..=max_exp {
                        let v = u.repeat(k).concat(x);
                        if v.is_empty() {
                            continue;
                        }
                        push(
                            vec![u.clone(), v, w.clone()],
                            FormMatch {
                                family,
                                params: vec![
                                    ("x", fmt(alpha, x)),
                                    ("y", fmt(alpha, y)),
                                    ("i", k.to_string()),
                                ],
                            },
                        );
                    }
                }
            }
        }
        FormFamily::SkewPower => {
            for t in &nonempty {
                let s = t.concat(&theta.apply(t));
                for k in 0..=max_exp {
                    for n in 0..=max_exp {
                        let u = theta.apply(t).concat(&s.repeat(k));
                        let v = s.repeat(n).concat(t);
                        let w = s.repeat(k).concat(t);
                        push(
                            vec![u, v, w],
                            FormMatch {
                                family,
                                params: vec![
                                    ("t", fmt(alpha, t)),
                                    ("k", k.to_string()),
                                    ("n", n.to_string()),
                                ],
                            },
                        );
                    }
                }
            }
        }
        FormFamily::PalPrefix => {
            for gamma in &words {
                if !is_pal(theta, gamma) {
                    continue;
                }
                for w in &nonempty {
                    push(
                        vec![gamma.concat(w), (*w).clone()],
                        FormMatch {
                            family,
                            params: vec![("gamma", fmt(alpha, gamma))],
                        },
                    );
                }
            }
        }
        FormFamily::ChainLang => {
            for x in &words {
                for y in &words {
                    if x.len() + y.len() == 0 {
                        continue;
                    }
                    for i in 1..=max_exp {
                        let u = x.concat(y).repeat(i);
                        let v = y.concat(x).repeat(i);
                        push(
                            vec![u, v],
                            FormMatch {
                                family,
                                params: vec![
                                    ("x", fmt(alpha, x)),
                                    ("y", fmt(alpha, y)),
                                    ("i", i.to_string()),
                                ],
                            },
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Both words powers of a common word (optionally a θ-palindrome): complete
/// via primitive roots, since z^d is a θ-palindrome exactly when z is.
pub fn common_power_pair(
    theta: &Involution,
    x: &Word,
    y: &Word,
    palindromic: bool,
) -> Option<(Word, usize, usize)> {
    if x.is_empty() || y.is_empty() {
        return None;
    }
    let rx = primitive_root(x).ok()?;
    let ry = primitive_root(y).ok()?;
    if rx.root != ry.root {
        return None;
    }
    if palindromic && !is_pal(theta, &rx.root) {
        return None;
    }
    Some((rx.root, rx.exponent, ry.exponent))
}

/// u = xy, v = (xy)^k x, w = yx; `palindromic` additionally requires x and y
/// to be θ-palindromes and then allows empty x.
pub fn conj_split(
    theta: &Involution,
    u: &Word,
    v: &Word,
    w: &Word,
    palindromic: bool,
) -> Option<(Word, Word, usize)> {
    if u.is_empty() || w.len() != u.len() {
        return None;
    }
    let lo = if palindromic { 0 } else { 1 };
    for j in lo..=u.len() {
        let x = u.prefix(j);
        let y = u.suffix_from(j);
        if palindromic && !(is_pal(theta, &x) && is_pal(theta, &y)) {
            continue;
        }
        if *w != y.concat(&x) {
            continue;
        }
        if v.len() < j || (v.len() - j) % u.len() != 0 {
            continue;
        }
        let k = (v.len() - j) / u.len();
        if *v == u.repeat(k).concat(&x) {
            return Some((x, y, k));
        }
    }
    None
}

/// With s = tθ(t): u = θ(t)s^k and v = s^n t, and w = s^k t when a third
/// word is supplied. The seed length determines every parameter.
pub fn skew_power(
    theta: &Involution,
    u: &Word,
    v: &Word,
    w: Option<&Word>,
) -> Option<(Word, usize, usize)> {
    for d in 1..=v.len() {
        if (v.len() - d) % (2 * d) != 0 || u.len() < d || (u.len() - d) % (2 * d) != 0 {
            continue;
        }
        let t = v.suffix_from(v.len() - d);
        let s = t.concat(&theta.apply(&t));
        let n = (v.len() - d) / (2 * d);
        let k = (u.len() - d) / (2 * d);
        if *v != s.repeat(n).concat(&t) || *u != theta.apply(&t).concat(&s.repeat(k)) {
            continue;
        }
        if let Some(w) = w {
            if *w != s.repeat(k).concat(&t) {
                continue;
            }
        }
        return Some((t, k, n));
    }
    None
}

/// v = γw with γ a θ-palindrome (possibly empty).
pub fn pal_prefix(theta: &Involution, v: &Word, w: &Word) -> Option<Word> {
    if v.len() < w.len() || !v.ends_with(w) {
        return None;
    }
    let gamma = v.prefix(v.len() - w.len());
    is_pal(theta, &gamma).then_some(gamma)
}

/// All (x, y, i) with u = (xy)^i and v = (yx)^i, i ≥ 1.
pub fn chain_candidates(u: &Word, v: &Word) -> Vec<(Word, Word, usize)> {
    let mut out = Vec::new();
    if u.is_empty() || u.len() != v.len() {
        return out;
    }
    for i in 1..=u.len() {
        if u.len() % i != 0 {
            continue;
        }
        let d = u.len() / i;
        let block = u.prefix(d);
        if block.repeat(i) != *u {
            continue;
        }
        for split in 0..=d {
            let x = block.prefix(split);
            let y = block.suffix_from(split);
            if *v == y.concat(&x).repeat(i) {
                out.push((x, y, i));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna() -> Involution {
        Involution::dna()
    }

    fn w(inv: &Involution, s: &str) -> Word {
        inv.alphabet().parse_word(s).unwrap()
    }

    #[test]
    fn skew_power_dna_example() {
        let th = dna();
        // t=A: s=AT, u=θ(t)s^1=TAT, v=s^1 t=ATA
        let got = skew_power(&th, &w(&th, "TAT"), &w(&th, "ATA"), None).unwrap();
        assert_eq!(got, (w(&th, "A"), 1, 1));
    }

    #[test]
    fn common_palindrome_powers() {
        let th = Involution::parse_inline("a->a b->b antimorphic").unwrap();
        assert_eq!(
            common_power_pair(&th, &w(&th, "aa"), &w(&th, "aaaa"), true),
            Some((w(&th, "a"), 2, 4))
        );
        let swap = Involution::parse_inline("a<->b antimorphic").unwrap();
        assert_eq!(
            common_power_pair(&swap, &w(&swap, "aa"), &w(&swap, "aaaa"), true),
            None
        );
    }

    #[test]
    fn conj_split_example() {
        let th = Involution::parse_inline("a<->b antimorphic").unwrap();
        let got = conj_split(&th, &w(&th, "ab"), &w(&th, "a"), &w(&th, "ba"), false).unwrap();
        assert_eq!(got, (w(&th, "a"), w(&th, "b"), 0));
        assert_eq!(
            conj_split(&th, &w(&th, "ab"), &w(&th, "b"), &w(&th, "ba"), false),
            None
        );
    }

    #[test]
    fn chain_candidates_example() {
        let th = Involution::parse_inline("a<->b antimorphic").unwrap();
        let got = chain_candidates(&w(&th, "ab"), &w(&th, "ba"));
        assert!(got.contains(&(w(&th, "a"), w(&th, "b"), 1)));
    }

    #[test]
    fn generator_matcher_round_trip() {
        // every generated instance is found back by its matcher
        for theta in [
            Involution::parse_inline("a<->b antimorphic").unwrap(),
            Involution::parse_inline("a->a b->b antimorphic").unwrap(),
        ] {
            for family in [
                FormFamily::PowersOfCommonWord,
                FormFamily::PowersOfCommonPalindrome,
                FormFamily::ConjSplit,
                FormFamily::PalinConjSplit,
                FormFamily::SkewPower,
                FormFamily::PalPrefix,
                FormFamily::ChainLang,
            ] {
                for (tuple, gen) in gen_family(family, &theta, 2, 2).unwrap() {
                    let got = match_form(family, &theta, &tuple).unwrap();
                    assert!(
                        got.is_some(),
                        "{} instance {:?} not matched",
                        family.name(),
                        gen.describe()
                    );
                }
            }
        }
    }

    #[test]
    fn pal_prefix_generator_emits_only_palindromes() {
        let th = Involution::parse_inline("a<->b antimorphic").unwrap();
        for (tuple, m) in gen_family(FormFamily::PalPrefix, &th, 2, 2).unwrap() {
            let gamma = m
                .params
                .iter()
                .find(|(k, _)| *k == "gamma")
                .unwrap()
                .1
                .clone();
            let gamma = th.alphabet().parse_word(&gamma).unwrap();
            assert!(th.is_theta_palindrome(&gamma).unwrap());
            assert_eq!(tuple[0], gamma.concat(&tuple[1]));
        }
    }
}
