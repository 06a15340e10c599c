//! Verification of the word-language conjugacy equations. Hypotheses
//! combine u ⇆θ L = L ⇆θ v with a one-sided word-language equation; they
//! are decided by automata equivalence on generated power- and
//! chain-language instances, and by exact set computation on all finite
//! languages within bounds. Conclusions are matched structurally, with
//! language containments checked automata-exactly or member-exactly.

use bicat_core::bicat::WordSet;
use bicat_core::combinatorics::primitive_root;
use bicat_core::equation::{
    bicat_equation_check, lang_equation_check, EquationOutcome, EquationVariant,
};
use bicat_core::lang::{lang_bicat, words_up_to};
use bicat_core::nfa::Nfa;
use bicat_core::{Involution, Word};

use super::fmt;
use crate::forms::chain_candidates;
use crate::{Bounds, OracleError, ReportBuilder, VerificationReport};

/// A language given either exactly or as an automaton; containments are
/// member-exact in the first case and automata-exact or bounded-exact in
/// the second.
enum LangHandle<'a> {
    Finite(&'a WordSet),
    Automaton { nfa: &'a Nfa, member_bound: usize },
}

impl LangHandle<'_> {
    fn members(&self, theta: &Involution) -> Vec<Word> {
        let _ = theta;
        match self {
            LangHandle::Finite(set) => set.iter().cloned().collect(),
            LangHandle::Automaton { nfa, member_bound } => {
                nfa.enumerate(*member_bound).iter().cloned().collect()
            }
        }
    }

    /// L ⊆ {s^k : k ≥ 1}.
    fn subset_of_power(&self, theta: &Involution, s: &Word) -> bool {
        match self {
            LangHandle::Finite(set) => set.iter().all(|m| {
                !m.is_empty() && m.len() % s.len() == 0 && s.repeat(m.len() / s.len()) == *m
            }),
            LangHandle::Automaton { nfa, .. } => {
                let chain = Nfa::literal(theta.alphabet().clone(), s).plus();
                matches!(nfa.subset_witness(&chain), Ok(None))
            }
        }
    }

    /// L ⊆ {x(yx)^j : j ≥ 0}.
    fn subset_of_chain(&self, theta: &Involution, x: &Word, y: &Word) -> bool {
        let yx = y.concat(x);
        match self {
            LangHandle::Finite(set) => set.iter().all(|m| {
                m.len() >= x.len()
                    && m.starts_with(x)
                    && (m.len() - x.len()) % yx.len().max(1) == 0
                    && (yx.is_empty() && m.len() == x.len()
                        || *m == x.concat(&yx.repeat((m.len() - x.len()) / yx.len())))
            }),
            LangHandle::Automaton { nfa, .. } => {
                let chain = Nfa::literal(theta.alphabet().clone(), x)
                    .concat(&Nfa::literal(theta.alphabet().clone(), &yx).star());
                match chain {
                    Ok(chain) => matches!(nfa.subset_witness(&chain), Ok(None)),
                    Err(_) => false,
                }
            }
        }
    }
}

/// All s with u = s^m for some m ≥ 1 (prefix lengths dividing |u|).
fn power_bases(u: &Word) -> Vec<(Word, usize)> {
    let mut out = Vec::new();
    for d in 1..=u.len() {
        if u.len() % d != 0 {
            continue;
        }
        let s = u.prefix(d);
        let m = u.len() / d;
        if s.repeat(m) == *u {
            out.push((s, m));
        }
    }
    out
}

fn is_pal(theta: &Involution, w: &Word) -> bool {
    theta.is_theta_palindrome(w).unwrap_or(false)
}

fn power_of(s: &Word, w: &Word) -> Option<usize> {
    if s.is_empty() || w.is_empty() || w.len() % s.len() != 0 {
        return None;
    }
    let n = w.len() / s.len();
    (s.repeat(n) == *w).then_some(n)
}

/// Conclusion matcher for the uL = Lv and uL = Lθ(v) variants.
fn teq12_cases(
    theta: &Involution,
    which: u8,
    u: &Word,
    v: &Word,
    l: &LangHandle,
) -> Vec<&'static str> {
    let mut hits = Vec::new();
    for (s, _m) in power_bases(u) {
        let v_target = if which == 1 {
            v.clone()
        } else {
            theta.apply(v)
        };
        if power_of(&s, &v_target).is_some() && l.subset_of_power(theta, &s) {
            if which == 1 {
                hits.push("1:power-lang");
            } else {
                hits.push("1:power-lang-image");
            }
            if is_pal(theta, &s) && power_of(&s, v).is_some() {
                hits.push("2:pal-power-lang");
            }
            break;
        }
    }
    let chain_pairs: Vec<(Word, Word, usize)> = if which == 1 {
        chain_candidates(u, v)
    } else if u == v {
        // u = (xy)^i = v: enumerate factorizations of u directly
        let mut out = Vec::new();
        for i in 1..=u.len() {
            if u.len() % i != 0 {
                continue;
            }
            let block = u.prefix(u.len() / i);
            if block.repeat(i) != *u {
                continue;
            }
            for split in 0..=block.len() {
                out.push((block.prefix(split), block.suffix_from(split), i));
            }
        }
        out
    } else {
        Vec::new()
    };
    for (x, y, _i) in chain_pairs {
        if is_pal(theta, &x) && is_pal(theta, &y) && l.subset_of_chain(theta, &x, &y) {
            hits.push("3:pal-chain-lang");
            break;
        }
    }
    hits
}

/// Conclusion matcher for uL = θ(L)v and uL = θ(L)θ(v): u = (xy)^i z with
/// xy primitive, v = z(θ(y)θ(x))^i (literal z, or θ(z) as a flagged
/// repair), and every member of L of the form w z' (θ(y)θ(x))^k with w, z'
/// θ-palindromes and k ≥ 1.
fn teq34_cases(
    theta: &Involution,
    which: u8,
    u: &Word,
    v: &Word,
    l: &LangHandle,
) -> Vec<&'static str> {
    if which == 4 && u != v {
        return Vec::new();
    }
    let members = l.members(theta);
    let mut hits = Vec::new();
    for i in 1..=u.len() {
        for d in 1..=u.len() / i {
            let block = u.prefix(d);
            let z = u.suffix_from(i * d);
            if block.repeat(i).concat(&z) != *u {
                continue;
            }
            if !primitive_root(&block)
                .map(|r| r.exponent == 1)
                .unwrap_or(false)
            {
                continue;
            }
            let tail_block = theta.apply(&block);
            let v_ok = if which == 3 {
                if *v == z.concat(&tail_block.repeat(i)) {
                    Some(false)
                } else if *v == theta.apply(&z).concat(&tail_block.repeat(i)) {
                    Some(true)
                } else {
                    None
                }
            } else {
                Some(false)
            };
            let Some(repaired) = v_ok else {
                continue;
            };
            let strict = members
                .iter()
                .all(|m| member_fits(theta, m, &tail_block, true));
            let weak = strict
                || members
                    .iter()
                    .all(|m| member_fits(theta, m, &tail_block, false));
            if weak {
                hits.push(match (strict, repaired) {
                    (true, false) => "1:sandwich-lang",
                    (true, true) => "1:sandwich-lang(repaired z)",
                    (false, false) => "1:sandwich-lang(free prefix)",
                    (false, true) => "1:sandwich-lang(free prefix, repaired z)",
                });
                return hits;
            }
        }
    }
    hits
}

/// m = w z (tail)^k with z a θ-palindrome and k ≥ 1; `strict` additionally
/// requires w to be a θ-palindrome rather than an arbitrary word, which is
/// the literal reading of the stated containment set.
fn member_fits(theta: &Involution, m: &Word, tail: &Word, strict: bool) -> bool {
    if tail.is_empty() {
        return false;
    }
    for k in 1..=m.len() / tail.len() {
        let t = tail.repeat(k);
        if !m.ends_with(&t) {
            continue;
        }
        let prefix = m.prefix(m.len() - t.len());
        for split in 0..=prefix.len() {
            let w_ok = !strict || is_pal(theta, &prefix.prefix(split));
            if w_ok && is_pal(theta, &prefix.suffix_from(split)) {
                return true;
            }
        }
    }
    false
}

struct GenInstance {
    desc: String,
    u: Word,
    v: Word,
    nfa: Nfa,
}

/// Power languages s⁺ and chain languages x(yx)* with all (u, v)
/// candidates; the hypothesis filters decide which instances count.
fn generated_instances(theta: &Involution, bounds: &Bounds) -> Vec<GenInstance> {
    let alpha = theta.alphabet();
    let words = words_up_to(alpha, bounds.lang_word_len, true);
    let mut out = Vec::new();
    for s in words.iter().filter(|w| !w.is_empty()) {
        let nfa = Nfa::literal(alpha.clone(), s).plus();
        for m in 1..=bounds.exponent {
            for n in 1..=bounds.exponent {
                let u = s.repeat(m);
                let straight = s.repeat(n);
                let image = theta.apply(&straight);
                out.push(GenInstance {
                    desc: format!("power s={} m={m} n={n}", fmt(alpha, s)),
                    u: u.clone(),
                    v: straight,
                    nfa: nfa.clone(),
                });
                out.push(GenInstance {
                    desc: format!("power s={} m={m} n={n} v-imaged", fmt(alpha, s)),
                    u,
                    v: image,
                    nfa: nfa.clone(),
                });
            }
        }
    }
    for x in words.iter().filter(|w| !w.is_empty()) {
        for y in &words {
            let xy = x.concat(y);
            let yx = y.concat(x);
            let nfa = Nfa::literal(alpha.clone(), x)
                .concat(&Nfa::literal(alpha.clone(), &yx).star())
                .expect("same alphabet");
            for i in 1..=bounds.exponent {
                out.push(GenInstance {
                    desc: format!("chain x={} y={} i={i}", fmt(alpha, x), fmt(alpha, y)),
                    u: xy.repeat(i),
                    v: yx.repeat(i),
                    nfa: nfa.clone(),
                });
                out.push(GenInstance {
                    desc: format!("chain x={} y={} i={i} v=u", fmt(alpha, x), fmt(alpha, y)),
                    u: xy.repeat(i),
                    v: xy.repeat(i),
                    nfa: nfa.clone(),
                });
            }
        }
    }
    out
}

fn finite_langs(theta: &Involution, bounds: &Bounds) -> Vec<WordSet> {
    let words = words_up_to(theta.alphabet(), bounds.lang_word_len, false);
    let mut out = Vec::new();
    if words.len() <= 8 {
        for mask in 1u32..(1 << words.len()) {
            out.push(
                words
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, w)| w.clone())
                    .collect(),
            );
        }
    } else {
        for (i, w1) in words.iter().enumerate() {
            out.push(WordSet::singleton(w1.clone()));
            for w2 in &words[i + 1..] {
                out.push([w1.clone(), w2.clone()].into_iter().collect());
            }
        }
    }
    out
}

fn product_word_set(words: &[&Word], l: &WordSet, word_first: bool) -> WordSet {
    let mut out = WordSet::new();
    for w in words {
        for m in l {
            out.insert(if word_first { w.concat(m) } else { m.concat(w) });
        }
    }
    out
}

/// The finite-set evaluation of the hypothesis equation for each variant.
fn finite_hypothesis(theta: &Involution, which: u8, u: &Word, v: &Word, l: &WordSet) -> bool {
    let ul = product_word_set(&[u], l, true);
    let rhs = match which {
        1 => product_word_set(&[v], l, false),
        2 => product_word_set(&[&theta.apply(v)], l, false),
        3 => {
            let tl: WordSet = l.iter().map(|m| theta.apply(m)).collect();
            product_word_set(&[v], &tl, false)
        }
        4 => {
            let tl: WordSet = l.iter().map(|m| theta.apply(m)).collect();
            product_word_set(&[&theta.apply(v)], &tl, false)
        }
        _ => unreachable!(),
    };
    ul == rhs
}

pub fn teq(
    theta: &Involution,
    bounds: &Bounds,
    which: u8,
) -> Result<VerificationReport, OracleError> {
    let name = format!("teq{which}");
    let mut rb = ReportBuilder::new(&name, theta);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("exponent", bounds.exponent);
    rb.bound("word_len", bounds.word_len);
    let member_bound = bounds.closure_len + bounds.word_len;
    rb.bound("member_check_len", member_bound);
    let variant = match which {
        1 => EquationVariant::Lv,
        2 => EquationVariant::LTv,
        3 => EquationVariant::TLv,
        4 => EquationVariant::TLTv,
        _ => unreachable!(),
    };
    let alpha = theta.alphabet();
    let instances = generated_instances(theta, bounds);
    bounds.check_budget((instances.len() as u64).saturating_mul(4096))?;
    let mut survivors = 0u64;
    let mut repairs = 0u64;
    for inst in &instances {
        let hyp1 = matches!(
            lang_equation_check(theta, &inst.u, &inst.v, &inst.nfa, variant)?,
            EquationOutcome::Holds
        );
        if !hyp1 {
            continue;
        }
        let hyp2 = matches!(
            bicat_equation_check(theta, &inst.u, &inst.v, &inst.nfa)?,
            EquationOutcome::Holds
        );
        if !hyp2 {
            continue;
        }
        survivors += 1;
        let handle = LangHandle::Automaton {
            nfa: &inst.nfa,
            member_bound,
        };
        let hits = match which {
            1 | 2 => teq12_cases(theta, which, &inst.u, &inst.v, &handle),
            _ => teq34_cases(theta, which, &inst.u, &inst.v, &handle),
        };
        if hits.is_empty() {
            rb.counterexample(format!(
                "{}: u={} v={}: hypotheses hold but no conclusion matches",
                inst.desc,
                fmt(alpha, &inst.u),
                fmt(alpha, &inst.v)
            ));
        } else {
            if hits.iter().all(|h| h.contains("repaired")) {
                repairs += 1;
            }
            rb.witness(format!(
                "{}: u={} v={}: {}",
                inst.desc,
                fmt(alpha, &inst.u),
                fmt(alpha, &inst.v),
                hits.join(",")
            ));
        }
    }
    rb.cases(instances.len() as u64);

    // exact route over all finite languages
    let langs = finite_langs(theta, bounds);
    let uv_words = words_up_to(alpha, bounds.word_len.min(3), false);
    bounds.check_budget(
        (langs.len() as u64)
            .saturating_mul((uv_words.len() as u64).saturating_pow(2))
            .saturating_mul(64),
    )?;
    let mut finite_survivors = 0u64;
    for l in &langs {
        for u in &uv_words {
            for v in &uv_words {
                if !finite_hypothesis(theta, which, u, v, l) {
                    continue;
                }
                let left = lang_bicat(theta, &WordSet::singleton(u.clone()), l);
                let right = lang_bicat(theta, l, &WordSet::singleton(v.clone()));
                if left != right {
                    continue;
                }
                finite_survivors += 1;
                let handle = LangHandle::Finite(l);
                let hits = match which {
                    1 | 2 => teq12_cases(theta, which, u, v, &handle),
                    _ => teq34_cases(theta, which, u, v, &handle),
                };
                if hits.is_empty() {
                    let members: Vec<String> = l.iter().map(|m| fmt(alpha, m)).collect();
                    rb.counterexample(format!(
                        "finite L={{{}}} u={} v={}: hypotheses hold but no conclusion matches",
                        members.join(","),
                        fmt(alpha, u),
                        fmt(alpha, v)
                    ));
                }
            }
        }
    }
    rb.cases((langs.len() * uv_words.len() * uv_words.len()) as u64);
    rb.note(format!(
        "generated instances: {} ({survivors} satisfied the hypotheses); finite instances satisfying the hypotheses: {finite_survivors}",
        instances.len()
    ));
    if repairs > 0 {
        rb.note(format!(
            "{repairs} instances matched only with the image of z"
        ));
    }
    Ok(rb.finish())
}

/// teq5: under u ⇆θ L = L ⇆θ v, each one-sided equation cancels.
pub fn teq5(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let mut rb = ReportBuilder::new("teq5", theta);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("word_len", bounds.word_len);
    let alpha = theta.alphabet();
    let one_sided = |which: u8, u: &Word, v: &Word, l: &WordSet| -> bool {
        let ul = product_word_set(&[u], l, true);
        let rhs = match which {
            1 => product_word_set(&[v], l, true),
            2 => product_word_set(&[&theta.apply(v)], l, true),
            3 => {
                let tl: WordSet = l.iter().map(|m| theta.apply(m)).collect();
                product_word_set(&[v], &tl, true)
            }
            4 => {
                let tl: WordSet = l.iter().map(|m| theta.apply(m)).collect();
                product_word_set(&[&theta.apply(v)], &tl, true)
            }
            _ => unreachable!(),
        };
        ul == rhs
    };
    let conclusion = |which: u8, u: &Word, v: &Word, l: &WordSet| -> bool {
        let word_ok = match which {
            1 | 3 => u == v,
            _ => *u == theta.apply(v),
        };
        let lang_ok = if which >= 3 {
            let image: WordSet = l.iter().map(|m| theta.apply(m)).collect();
            image == *l
        } else {
            true
        };
        word_ok && lang_ok
    };
    let langs = finite_langs(theta, bounds);
    let uv_words = words_up_to(alpha, bounds.word_len.min(3), false);
    bounds.check_budget(
        (langs.len() as u64)
            .saturating_mul((uv_words.len() as u64).saturating_pow(2))
            .saturating_mul(64),
    )?;
    let mut satisfied = 0u64;
    for l in &langs {
        for u in &uv_words {
            for v in &uv_words {
                let bicat_eq = lang_bicat(theta, &WordSet::singleton(u.clone()), l)
                    == lang_bicat(theta, l, &WordSet::singleton(v.clone()));
                if !bicat_eq {
                    continue;
                }
                for which in 1..=4u8 {
                    if !one_sided(which, u, v, l) {
                        continue;
                    }
                    satisfied += 1;
                    if !conclusion(which, u, v, l) {
                        let members: Vec<String> = l.iter().map(|m| fmt(alpha, m)).collect();
                        rb.counterexample(format!(
                            "variant {which}: L={{{}}} u={} v={}: cancellation fails",
                            members.join(","),
                            fmt(alpha, u),
                            fmt(alpha, v)
                        ));
                    }
                }
            }
        }
    }
    rb.cases((langs.len() * uv_words.len() * uv_words.len() * 4) as u64);
    rb.note(format!("hypotheses held on {satisfied} cases"));
    Ok(rb.finish())
}

/// uL = vL forces u = v, with the three θ-image variants; exhaustive over
/// all finite languages within bounds.
pub fn lemeq5(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let mut rb = ReportBuilder::new("lemeq5", theta);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("word_len", bounds.word_len);
    let alpha = theta.alphabet();
    let langs = finite_langs(theta, bounds);
    let uv_words = words_up_to(alpha, bounds.word_len.min(3), false);
    bounds.check_budget(
        (langs.len() as u64)
            .saturating_mul((uv_words.len() as u64).saturating_pow(2))
            .saturating_mul(64),
    )?;
    let mut satisfied = 0u64;
    for l in &langs {
        let tl: WordSet = l.iter().map(|m| theta.apply(m)).collect();
        for u in &uv_words {
            let ul = product_word_set(&[u], l, true);
            for v in &uv_words {
                let tv = theta.apply(v);
                for which in 1..=4u8 {
                    let (rhs, word_ok, lang_ok) = match which {
                        1 => (product_word_set(&[v], l, true), u == v, true),
                        2 => (product_word_set(&[&tv], l, true), *u == tv, true),
                        3 => (product_word_set(&[v], &tl, true), u == v, tl == *l),
                        4 => (product_word_set(&[&tv], &tl, true), *u == tv, tl == *l),
                        _ => unreachable!(),
                    };
                    if ul != rhs {
                        continue;
                    }
                    satisfied += 1;
                    if !(word_ok && lang_ok) {
                        let members: Vec<String> = l.iter().map(|m| fmt(alpha, m)).collect();
                        rb.counterexample(format!(
                            "variant {which}: L={{{}}} u={} v={}: cancellation fails",
                            members.join(","),
                            fmt(alpha, u),
                            fmt(alpha, v)
                        ));
                    }
                }
            }
        }
    }
    rb.cases((langs.len() * uv_words.len() * uv_words.len() * 4) as u64);
    rb.note(format!("hypotheses held on {satisfied} cases"));
    Ok(rb.finish())
}
