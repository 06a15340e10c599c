//! Language-level verification: the product characterization, power laws,
//! plus-closedness, closure transfer, boolean (non-)closure with the pinned
//! counterexample languages, and the iterative-closure characterization.

use bicat_core::bicat::{strong_bicat, WordSet};
use bicat_core::lang::{
    iterative_closure_truncated, lang_bicat, lang_iterated, lang_phi, lang_power,
    plus_closure_truncated, words_up_to,
};
use bicat_core::nfa::Nfa;
use bicat_core::predicate::{closed_check, closed_violations, ClosedCheck, LangPredicate};
use bicat_core::{Involution, Word};
use rayon::prelude::*;

use super::{domain_size, fmt};
use crate::{Bounds, OracleError, ReportBuilder, VerificationReport};

/// All languages over words up to `max_len`: the full powerset when small,
/// otherwise every language of at most two words.
fn sample_langs(theta: &Involution, max_len: usize, include_empty_word: bool) -> Vec<WordSet> {
    let words = words_up_to(theta.alphabet(), max_len, include_empty_word);
    if words.len() <= 8 {
        let mut out = Vec::with_capacity(1 << words.len());
        for mask in 0u32..(1 << words.len()) {
            out.push(
                words
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, w)| w.clone())
                    .collect(),
            );
        }
        out
    } else {
        let mut out = vec![WordSet::new()];
        for (i, w1) in words.iter().enumerate() {
            out.push(WordSet::singleton(w1.clone()));
            for w2 in &words[i + 1..] {
                out.push([w1.clone(), w2.clone()].into_iter().collect());
            }
        }
        out
    }
}

fn describe_lang(theta: &Involution, l: &WordSet) -> String {
    let words: Vec<String> = l.iter().map(|w| fmt(theta.alphabet(), w)).collect();
    format!("{{{}}}", words.join(","))
}

/// U⇆V computed as the union of per-pair bi-catenations equals the product
/// form U_φV_φ ∪ V_φU_φ.
pub fn lemch(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let langs = sample_langs(phi, bounds.lang_word_len, true);
    let n = langs.len() as u64;
    bounds.check_budget(n.saturating_mul(n).saturating_mul(64))?;
    let mut rb = ReportBuilder::new("lemch", phi);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("languages", langs.len());
    let cx: Vec<String> = langs
        .par_iter()
        .flat_map_iter(|l1| {
            let langs = &langs;
            langs.iter().filter_map(move |l2| {
                let by_pairs = lang_bicat(phi, l1, l2);
                let p1 = lang_phi(phi, l1);
                let p2 = lang_phi(phi, l2);
                let by_product = p1.product(&p2).union(&p2.product(&p1));
                (by_pairs != by_product).then(|| {
                    format!(
                        "U={} V={}: pairwise union differs from product form",
                        describe_lang(phi, l1),
                        describe_lang(phi, l2)
                    )
                })
            })
        })
        .collect();
    rb.cases(n.saturating_mul(n));
    for c in cx {
        rb.counterexample(c);
    }
    Ok(rb.finish())
}

/// The n-th power equals the n-fold product of the φ-closure; the iterated
/// operation route and the direct product route must agree.
pub fn pro1212(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let langs = sample_langs(phi, bounds.lang_word_len, true);
    let max_n = 4usize;
    bounds.check_budget((langs.len() as u64).saturating_mul(1 << (2 * max_n)))?;
    let mut rb = ReportBuilder::new("pro1212", phi);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("max_power", max_n);
    let cx: Vec<String> = langs
        .par_iter()
        .flat_map_iter(|l| {
            (0..=max_n).filter_map(move |n| {
                let by_power = lang_power(phi, l, n);
                let by_iteration = if n == 0 {
                    WordSet::singleton(Word::empty())
                } else {
                    lang_iterated(phi, l, l, n - 1)
                };
                (by_power != by_iteration).then(|| {
                    format!(
                        "L={} n={n}: block product differs from iterated operation",
                        describe_lang(phi, l)
                    )
                })
            })
        })
        .collect();
    rb.cases((langs.len() * (max_n + 1)) as u64);
    for c in cx {
        rb.counterexample(c);
    }
    Ok(rb.finish())
}

/// L^(n) ⇆ L^(m) = L^(n+m).
pub fn pro1213(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let langs = sample_langs(phi, bounds.lang_word_len, true);
    let max_sum = 5usize;
    bounds.check_budget((langs.len() as u64).saturating_mul(1 << (2 * max_sum)))?;
    let mut rb = ReportBuilder::new("pro1213", phi);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("max_power_sum", max_sum);
    let cx: Vec<String> = langs
        .par_iter()
        .flat_map_iter(|l| {
            (0..=max_sum).flat_map(move |n| {
                (0..=(max_sum - n)).filter_map(move |m| {
                    let left = lang_bicat(phi, &lang_power(phi, l, n), &lang_power(phi, l, m));
                    let right = lang_power(phi, l, n + m);
                    (left != right).then(|| {
                        format!(
                            "L={} n={n} m={m}: power addition fails",
                            describe_lang(phi, l)
                        )
                    })
                })
            })
        })
        .collect();
    let pair_count = ((max_sum + 1) * (max_sum + 2) / 2) as u64;
    rb.cases(langs.len() as u64 * pair_count);
    for c in cx {
        rb.counterexample(c);
    }
    Ok(rb.finish())
}

/// For every u, v in the truncated plus-closure, u⇆v stays inside it up to
/// the truncation length.
pub fn plus_closed(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let langs: Vec<WordSet> = sample_langs(phi, bounds.lang_word_len, false)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect();
    let max_len = bounds.closure_len;
    let closure_cap = domain_size(phi.alphabet().size(), max_len, false);
    bounds.check_budget(
        (langs.len() as u64).saturating_mul(closure_cap.saturating_mul(closure_cap) / 4),
    )?;
    let mut rb = ReportBuilder::new("plus_closed", phi);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("closure_len", max_len);
    let results: Vec<Result<u64, String>> = langs
        .par_iter()
        .map(|l| {
            let closure = plus_closure_truncated(phi, l, max_len).map_err(|e| e.to_string())?;
            let mut pairs = 0u64;
            for u in &closure {
                for v in &closure {
                    pairs += 1;
                    for w in &strong_bicat(phi, u, v) {
                        if w.len() <= max_len && !closure.contains(w) {
                            return Err(format!(
                                "L={} u={} v={} w={}: escapes the plus-closure",
                                describe_lang(phi, l),
                                fmt(phi.alphabet(), u),
                                fmt(phi.alphabet(), v),
                                fmt(phi.alphabet(), w)
                            ));
                        }
                    }
                }
            }
            Ok(pairs)
        })
        .collect();
    let mut pairs = 0u64;
    for r in results {
        match r {
            Ok(n) => pairs += n,
            Err(c) => {
                rb.counterexample(c);
            }
        }
    }
    rb.cases(pairs);
    Ok(rb.finish())
}

/// For sample closed languages: reversal and image stay closed, catenation
/// stays inside, and products of φ-closure factors bi-catenate into L.
pub fn closed_transfer(
    phi: &Involution,
    bounds: &Bounds,
) -> Result<VerificationReport, OracleError> {
    let alpha = phi.alphabet();
    let bound = bounds.closure_len;
    bounds.check_budget(
        domain_size(alpha.size(), bound, false)
            .saturating_pow(2)
            .saturating_mul(64),
    )?;
    let mut rb = ReportBuilder::new("closed_transfer", phi);
    rb.bound("closure_len", bound);
    let mut samples: Vec<(String, LangPredicate)> = Vec::new();
    let letters: Vec<_> = alpha.letters().collect();
    if letters.len() >= 2 {
        samples.push((
            "count-eq".into(),
            LangPredicate::CountEq(letters[0], letters[1]),
        ));
        let seed: WordSet = [Word::from_letters(vec![letters[0], letters[1]])]
            .into_iter()
            .collect();
        let closure = Nfa::from_words(alpha.clone(), &seed).iter_closure(phi)?;
        samples.push((
            "closure-of-two-letter-word".into(),
            LangPredicate::Automaton(closure),
        ));
        let seed2: WordSet = [
            Word::from_letters(vec![letters[0]]),
            Word::from_letters(vec![letters[1], letters[0]]),
        ]
        .into_iter()
        .collect();
        let closure2 = Nfa::from_words(alpha.clone(), &seed2).iter_closure(phi)?;
        samples.push((
            "closure-of-two-seeds".into(),
            LangPredicate::Automaton(closure2),
        ));
    }
    if letters.len() >= 3 {
        samples.push((
            "count-sum".into(),
            LangPredicate::CountSumEq(letters[0], letters[1], letters[2]),
        ));
        samples.push((
            "count-all-eq".into(),
            LangPredicate::CountAllEq(letters[0], letters[1], letters[2]),
        ));
    }
    let members_of = |pred: &LangPredicate, cap: usize| -> Vec<Word> {
        words_up_to(alpha, cap, false)
            .into_iter()
            .filter(|w| pred.member(phi, w))
            .collect()
    };
    let mut cases = 0u64;
    for (name, pred) in &samples {
        match closed_check(phi, pred, bound) {
            ClosedCheck::Closed => {}
            ClosedCheck::Counterexample { u, v, w } => {
                rb.counterexample(format!(
                    "sample {name} is not closed: u={} v={} w={}",
                    fmt(alpha, &u),
                    fmt(alpha, &v),
                    fmt(alpha, &w)
                ));
                continue;
            }
        }
        let mut transforms = vec![
            ("reversal", LangPredicate::Reversal(Box::new(pred.clone()))),
            ("image", LangPredicate::Image(Box::new(pred.clone()))),
        ];
        if let LangPredicate::Automaton(nfa) = pred {
            // recheck the structurally constructed automata as well
            transforms.push((
                "reversed automaton",
                LangPredicate::Automaton(nfa.reverse()),
            ));
            transforms.push((
                "image automaton",
                LangPredicate::Automaton(nfa.involution_image(phi)),
            ));
        }
        for (variant, transformed) in transforms {
            match closed_check(phi, &transformed, bound) {
                ClosedCheck::Closed => {
                    rb.witness(format!("{name}: {variant} stays closed"));
                }
                ClosedCheck::Counterexample { u, v, w } => {
                    rb.counterexample(format!(
                        "{name}: {variant} loses closure at u={} v={} w={}",
                        fmt(alpha, &u),
                        fmt(alpha, &v),
                        fmt(alpha, &w)
                    ));
                }
            }
        }
        // closure under plain catenation
        let members = members_of(pred, bound);
        for u in &members {
            for v in &members {
                cases += 1;
                if !pred.member(phi, &u.concat(v)) {
                    rb.counterexample(format!(
                        "{name}: uv escapes for u={} v={}",
                        fmt(alpha, u),
                        fmt(alpha, v)
                    ));
                }
            }
        }
        // pair products: A, B products of two factors drawn from {L, φ(L)}
        let factor_bound = bound / 2;
        let plain = members_of(pred, factor_bound);
        let image: Vec<Word> = words_up_to(alpha, factor_bound, false)
            .into_iter()
            .filter(|w| pred.member(phi, &phi.apply(w)))
            .collect();
        let factors = [&plain, &image];
        let mut products: Vec<Word> = Vec::new();
        for f1 in factors {
            for f2 in factors {
                for a in f1 {
                    for b in f2 {
                        products.push(a.concat(b));
                    }
                }
            }
        }
        products.sort();
        products.dedup();
        for u in &products {
            for v in &products {
                cases += 1;
                if let Some(w) = strong_bicat(phi, u, v)
                    .iter()
                    .find(|w| !pred.member(phi, w))
                {
                    rb.counterexample(format!(
                        "{name}: pair product escapes at u={} v={} w={}",
                        fmt(alpha, u),
                        fmt(alpha, v),
                        fmt(alpha, w)
                    ));
                }
            }
        }
    }
    rb.cases(cases);
    rb.note(format!("samples checked: {}", samples.len()));
    Ok(rb.finish())
}

/// Intersections of closed languages stay closed; the complement and union
/// claims are refuted by searching the pinned example languages, and the
/// known witnesses must be among the violations found.
pub fn bool_closure(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let mut rb = ReportBuilder::new("bool_closure", phi);
    rb.bound("closure_len", bounds.closure_len);
    let alpha = phi.alphabet();
    let letters: Vec<_> = alpha.letters().collect();
    let mut cases = 0u64;

    // intersection on the caller profile where possible
    if letters.len() >= 2 {
        let seed: WordSet = [Word::from_letters(vec![letters[0], letters[1]])]
            .into_iter()
            .collect();
        let closure = Nfa::from_words(alpha.clone(), &seed).iter_closure(phi)?;
        let inter = LangPredicate::Intersection(
            Box::new(LangPredicate::CountEq(letters[0], letters[1])),
            Box::new(LangPredicate::Automaton(closure)),
        );
        cases += 1;
        if let ClosedCheck::Counterexample { u, v, w } =
            closed_check(phi, &inter, bounds.closure_len)
        {
            rb.counterexample(format!(
                "intersection lost closure: u={} v={} w={}",
                fmt(alpha, &u),
                fmt(alpha, &v),
                fmt(alpha, &w)
            ));
        } else {
            rb.witness("intersection of closed languages stays closed".to_string());
        }
    }

    // pinned three-letter intersection from the closed-language examples
    let abc = crate::profiles::abc_swap_fixed();
    let (a3, b3, c3) = {
        let ls: Vec<_> = abc.alphabet().letters().collect();
        (ls[0], ls[1], ls[2])
    };
    let inter3 = LangPredicate::Intersection(
        Box::new(LangPredicate::CountSumEq(a3, b3, c3)),
        Box::new(LangPredicate::CountAllEq(a3, b3, c3)),
    );
    cases += 1;
    if let ClosedCheck::Counterexample { u, v, w } = closed_check(&abc, &inter3, 4) {
        rb.counterexample(format!(
            "three-letter intersection lost closure: u={} v={} w={}",
            abc.alphabet().format_word(&u),
            abc.alphabet().format_word(&v),
            abc.alphabet().format_word(&w)
        ));
    } else {
        rb.witness("three-letter intersection stays closed".to_string());
    }

    // complement: search over the pinned balanced-count language
    let swap = crate::profiles::ab_swap();
    let (a2, b2) = {
        let ls: Vec<_> = swap.alphabet().letters().collect();
        (ls[0], ls[1])
    };
    let complement = LangPredicate::Complement(Box::new(LangPredicate::CountEq(a2, b2)));
    let violations = closed_violations(&swap, &complement, 3);
    cases += violations.len() as u64;
    if violations.is_empty() {
        rb.counterexample("complement claim has no violation within bounds".to_string());
    } else {
        rb.witness(format!(
            "complement not closed: {} violations found",
            violations.len()
        ));
        let aba = swap.alphabet().parse_word("aba").unwrap();
        let bab = swap.alphabet().parse_word("bab").unwrap();
        let ababab = swap.alphabet().parse_word("ababab").unwrap();
        if violations.contains(&(aba, bab, ababab)) {
            rb.note("confirmed complement witness: u=aba v=bab with ababab balanced".to_string());
        } else {
            rb.counterexample("known complement witness not found by the search".to_string());
        }
    }

    // union: the two three-letter closed languages
    let union = LangPredicate::Union(
        Box::new(LangPredicate::CountSumEq(a3, b3, c3)),
        Box::new(LangPredicate::CountAllEq(a3, b3, c3)),
    );
    let violations = closed_violations(&abc, &union, 4);
    cases += violations.len() as u64;
    if violations.is_empty() {
        rb.counterexample("union claim has no violation within bounds".to_string());
    } else {
        rb.witness(format!(
            "union not closed: {} violations found",
            violations.len()
        ));
        let abc_w = abc.alphabet().parse_word("abc").unwrap();
        let bcca = abc.alphabet().parse_word("bcca").unwrap();
        let abcbcca = abc.alphabet().parse_word("abcbcca").unwrap();
        if violations.contains(&(abc_w, bcca, abcbcca)) {
            rb.note("confirmed union witness: u=abc v=bcca with abcbcca outside".to_string());
        } else {
            rb.counterexample("known union witness not found by the search".to_string());
        }
    }
    rb.note(
        "complement and union searches use the pinned two- and three-letter example languages"
            .to_string(),
    );
    rb.cases(cases);
    Ok(rb.finish())
}

/// The layered iterative closure, the truncated plus-closure and the NFA
/// closure all denote the same language.
pub fn cl_characterization(
    phi: &Involution,
    bounds: &Bounds,
) -> Result<VerificationReport, OracleError> {
    let langs: Vec<WordSet> = sample_langs(phi, bounds.lang_word_len, false)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect();
    let max_len = bounds.closure_len;
    bounds.check_budget(
        (langs.len() as u64)
            .saturating_mul(domain_size(phi.alphabet().size(), max_len, false))
            .saturating_mul(8),
    )?;
    let mut rb = ReportBuilder::new("cl_characterization", phi);
    rb.bound("lang_word_len", bounds.lang_word_len);
    rb.bound("closure_len", max_len);
    let cx: Vec<String> = langs
        .par_iter()
        .filter_map(|l| {
            let layered = iterative_closure_truncated(phi, l, max_len).ok()?;
            let plus = plus_closure_truncated(phi, l, max_len).ok()?;
            if layered != plus {
                return Some(format!(
                    "L={}: layered closure differs from plus-closure",
                    describe_lang(phi, l)
                ));
            }
            let by_nfa = Nfa::from_words(phi.alphabet().clone(), l)
                .iter_closure(phi)
                .ok()?
                .enumerate(max_len);
            (layered != by_nfa).then(|| {
                format!(
                    "L={}: layered closure differs from the automaton closure",
                    describe_lang(phi, l)
                )
            })
        })
        .collect();
    rb.cases(langs.len() as u64);
    for c in cx {
        rb.counterexample(c);
    }
    Ok(rb.finish())
}
