//! Verification of the core operation properties: the commutation
//! criterion, closure under the involution, the binary-word-operation
//! property list, and the associativity sufficiency condition.

use bicat_core::bicat::{phi_pair, strong_bicat, WordSet};
use bicat_core::combinatorics::common_palindromic_root;
use bicat_core::lang::words_up_to;
use bicat_core::{Involution, Word};
use rayon::prelude::*;

use super::{domain_size, fmt};
use crate::{Bounds, OracleError, ReportBuilder, VerificationReport};

/// u⊗v = v⊗u iff u = v, u = θ(v), or both are powers of one θ-palindrome;
/// both directions checked by set enumeration.
pub fn omr1(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let n = domain_size(theta.alphabet().size(), bounds.word_len, false);
    bounds.check_budget(n.saturating_mul(n).saturating_mul(16))?;
    let mut rb = ReportBuilder::new("omr1", theta);
    rb.bound("word_len", bounds.word_len);
    let words = words_up_to(theta.alphabet(), bounds.word_len, false);
    let alpha = theta.alphabet();
    let outcomes: Vec<(usize, usize, bool, bool)> = words
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, u)| {
            let words = &words;
            words.iter().enumerate().map(move |(j, v)| {
                let equal = bicat_core::bicat::strong_cat(theta, u, v)
                    == bicat_core::bicat::strong_cat(theta, v, u);
                let witness = u == v
                    || *u == theta.apply(v)
                    || common_palindromic_root(theta, u, v)
                        .unwrap_or(None)
                        .is_some();
                (i, j, equal, witness)
            })
        })
        .collect();
    rb.cases(outcomes.len() as u64);
    for (i, j, equal, witness) in outcomes {
        if equal != witness {
            rb.counterexample(format!(
                "u={} v={}: set equality={} but criterion={}",
                fmt(alpha, &words[i]),
                fmt(alpha, &words[j]),
                equal,
                witness
            ));
        } else if equal {
            rb.witness(format!(
                "u={} v={} commute",
                fmt(alpha, &words[i]),
                fmt(alpha, &words[j])
            ));
        }
    }
    Ok(rb.finish())
}

/// x ∈ u⇆φv iff φ(x) ∈ u⇆φv, over all word pairs including λ.
pub fn bicat_phi_closure(
    phi: &Involution,
    bounds: &Bounds,
) -> Result<VerificationReport, OracleError> {
    let n = domain_size(phi.alphabet().size(), bounds.word_len, true);
    bounds.check_budget(n.saturating_mul(n).saturating_mul(16))?;
    let mut rb = ReportBuilder::new("bicat_phi_closure", phi);
    rb.bound("word_len", bounds.word_len);
    let words = words_up_to(phi.alphabet(), bounds.word_len, true);
    let alpha = phi.alphabet();
    let bad: Vec<(usize, usize, Word)> = words
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, u)| {
            let words = &words;
            words.iter().enumerate().filter_map(move |(j, v)| {
                let set = strong_bicat(phi, u, v);
                set.iter()
                    .find(|x| !set.contains(&phi.apply(x)))
                    .map(|x| (i, j, x.clone()))
            })
        })
        .collect();
    rb.cases((words.len() * words.len()) as u64);
    for (i, j, x) in bad {
        rb.counterexample(format!(
            "u={} v={}: {} in the set but its image is not",
            fmt(alpha, &words[i]),
            fmt(alpha, &words[j]),
            fmt(alpha, &x)
        ));
    }
    Ok(rb.finish())
}

/// The operation is length-increasing, φ-propagating and commutative
/// (universal scans); not propagating, not associative, and neither left-
/// nor right-inclusive (witness searches, which must succeed).
pub fn bw_properties(phi: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = phi.alphabet();
    let pair_domain = domain_size(alpha.size(), bounds.word_len, false);
    let triple_len = bounds.triple_len.min(bounds.word_len);
    let triple_domain = domain_size(alpha.size(), triple_len, false);
    bounds.check_budget(
        pair_domain
            .saturating_mul(pair_domain)
            .saturating_mul(32)
            .saturating_add(triple_domain.saturating_pow(3).saturating_mul(256)),
    )?;
    let mut rb = ReportBuilder::new("bw_properties", phi);
    rb.bound("word_len", bounds.word_len);
    rb.bound("triple_len", triple_len);

    let words = words_up_to(alpha, bounds.word_len, false);
    let parse = |s: &str| alpha.parse_word(s).ok();
    let k = alpha.size();
    let letters: Vec<_> = alpha.letters().collect();
    let count_vec = |w: &bicat_core::Word| -> Vec<usize> {
        let mut c = vec![0usize; k];
        for l in w.letters() {
            c[l.index()] += 1;
        }
        c
    };
    let counts: Vec<Vec<usize>> = words.iter().map(&count_vec).collect();
    let images: Vec<bicat_core::Word> = words.iter().map(|w| phi.apply(w)).collect();
    let pair_count_of = |c: &[usize], a: usize| -> usize {
        let img = phi.letter_image(letters[a]).index();
        if img == a {
            c[a]
        } else {
            c[a] + c[img]
        }
    };
    let bicat_of = |i: usize, j: usize| -> WordSet {
        let mut out = WordSet::new();
        for x in [&words[i], &images[i]] {
            for y in [&words[j], &images[j]] {
                out.insert(x.concat(y));
                out.insert(y.concat(x));
            }
        }
        out
    };

    // pair scan: universal length/propagation/commutation facts plus the
    // search for non-propagating witnesses
    struct PairScan {
        length_bad: Option<String>,
        commute_bad: Option<String>,
        phi_prop_bad: Option<String>,
        non_prop: Vec<String>,
        known_non_prop: Option<String>,
    }
    let known_u = parse("ATC");
    let known_v = parse("GCTA");
    let known_w = parse("GATGCTA");
    let scans: Vec<PairScan> = words
        .par_iter()
        .enumerate()
        .map(|(i, u)| {
            let mut scan = PairScan {
                length_bad: None,
                commute_bad: None,
                phi_prop_bad: None,
                non_prop: Vec::new(),
                known_non_prop: None,
            };
            for (j, v) in words.iter().enumerate() {
                let set = bicat_of(i, j);
                if scan.length_bad.is_none() {
                    if let Some(w) =
                        set.iter().find(|w| w.len() != u.len() + v.len() || w.len() <= u.len().max(v.len()))
                    {
                        scan.length_bad = Some(format!(
                            "u={} v={} w={}: length {} not increasing",
                            fmt(alpha, u),
                            fmt(alpha, v),
                            fmt(alpha, w),
                            w.len()
                        ));
                    }
                }
                if scan.commute_bad.is_none() && set != bicat_of(j, i) {
                    scan.commute_bad =
                        Some(format!("u={} v={}: not commutative", fmt(alpha, u), fmt(alpha, v)));
                }
                for w in &set {
                    let wc = count_vec(w);
                    for a in 0..k {
                        if scan.phi_prop_bad.is_none()
                            && pair_count_of(&wc, a)
                                != pair_count_of(&counts[i], a) + pair_count_of(&counts[j], a)
                        {
                            scan.phi_prop_bad = Some(format!(
                                "u={} v={} w={} letter={}: pair count not additive",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, w),
                                alpha.name(letters[a])
                            ));
                        }
                        if wc[a] != counts[i][a] + counts[j][a] && scan.non_prop.len() < 4 {
                            scan.non_prop.push(format!(
                                "u={} v={} w={} letter={}: {} != {}+{}",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, w),
                                alpha.name(letters[a]),
                                wc[a],
                                counts[i][a],
                                counts[j][a]
                            ));
                        }
                    }
                }
                if let (Some(pu), Some(pv), Some(pw)) = (&known_u, &known_v, &known_w) {
                    if u == pu && v == pv && set.contains(pw) {
                        if let Ok(g) = alpha.letter("G") {
                            scan.known_non_prop = Some(format!(
                                "confirmed non-propagating witness u=ATC v=GCTA w=GATGCTA letter=G: {} != {}+{}",
                                pw.count(g),
                                pu.count(g),
                                pv.count(g)
                            ));
                        }
                    }
                }
            }
            scan
        })
        .collect();
    rb.cases((words.len() * words.len()) as u64);
    let mut non_prop_found = Vec::new();
    let mut known_non_prop = None;
    for scan in scans {
        for bad in [scan.length_bad, scan.commute_bad, scan.phi_prop_bad]
            .into_iter()
            .flatten()
        {
            rb.counterexample(bad);
        }
        non_prop_found.extend(scan.non_prop);
        if known_non_prop.is_none() {
            known_non_prop = scan.known_non_prop;
        }
    }
    let moves_some_letter = alpha.letters().any(|a| phi.letter_image(a) != a);
    if non_prop_found.is_empty() {
        if moves_some_letter {
            rb.counterexample("claim 'not propagating' has no witness within bounds".to_string());
        } else {
            // an involution fixing every letter preserves all counts, so the
            // operation is propagating for this profile; the claim is
            // witnessed only by involutions that move a letter
            rb.note(
                "involution fixes every letter; operation is propagating on this profile"
                    .to_string(),
            );
        }
    } else {
        rb.witness(format!("not propagating: {}", non_prop_found[0]));
    }
    if let Some(text) = known_non_prop {
        rb.note(text);
    }

    // triple scan: associativity and inclusion witnesses
    let triple_words = words_up_to(alpha, triple_len, false);
    let triple_images: Vec<bicat_core::Word> = triple_words.iter().map(|w| phi.apply(w)).collect();
    let known_triple = (parse("AG"), parse("CA"), parse("AC"), parse("CACTAC"));
    struct TripleScan {
        left_only: Option<String>,
        right_only: Option<String>,
        known_assoc: Option<String>,
    }
    // the product of a φ-closed pair list with one φ-pair, both orders
    let bicat_against = |pairs: &[(bicat_core::Word, bicat_core::Word)],
                         b: &bicat_core::Word,
                         tb: &bicat_core::Word| {
        let mut out = WordSet::new();
        for (z, tz) in pairs {
            for x in [z, tz] {
                for y in [b, tb] {
                    out.insert(x.concat(y));
                    out.insert(y.concat(x));
                }
            }
        }
        out
    };
    let scans: Vec<TripleScan> = triple_words
        .par_iter()
        .enumerate()
        .map(|(ui, u)| {
            let tu = &triple_images[ui];
            let mut scan =
                TripleScan { left_only: None, right_only: None, known_assoc: None };
            for v in &triple_words {
                let uv = strong_bicat(phi, u, v);
                let uv_pairs: Vec<(bicat_core::Word, bicat_core::Word)> =
                    uv.iter().map(|z| (z.clone(), phi.apply(z))).collect();
                for (wi, w) in triple_words.iter().enumerate() {
                    let tw = &triple_images[wi];
                    let left = bicat_against(&uv_pairs, w, tw);
                    let vw = strong_bicat(phi, v, w);
                    let vw_pairs: Vec<(bicat_core::Word, bicat_core::Word)> =
                        vw.iter().map(|z| (z.clone(), phi.apply(z))).collect();
                    let right = bicat_against(&vw_pairs, u, tu);
                    let lo = left.iter().find(|x| !right.contains(x));
                    let ro = right.iter().find(|x| !left.contains(x));
                    if scan.left_only.is_none() {
                        if let Some(x) = lo {
                            scan.left_only = Some(format!(
                                "u={} v={} w={}: {} in (u<>v)<>w only",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, w),
                                fmt(alpha, x)
                            ));
                        }
                    }
                    if scan.right_only.is_none() {
                        if let Some(x) = ro {
                            scan.right_only = Some(format!(
                                "u={} v={} w={}: {} in u<>(v<>w) only",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, w),
                                fmt(alpha, x)
                            ));
                        }
                    }
                    if let (Some(pu), Some(pv), Some(pw), Some(px)) = (
                        &known_triple.0,
                        &known_triple.1,
                        &known_triple.2,
                        &known_triple.3,
                    ) {
                        if u == pu && v == pv && w == pw && left.contains(px) && !right.contains(px)
                        {
                            scan.known_assoc = Some(
                                "confirmed non-associativity witness u=AG v=CA w=AC: CACTAC in (u<>v)<>w only"
                                    .to_string(),
                            );
                        }
                    }
                }
            }
            scan
        })
        .collect();
    rb.cases((triple_words.len() as u64).saturating_pow(3));
    let mut left_only = None;
    let mut right_only = None;
    let mut known_assoc = None;
    for scan in scans {
        left_only = left_only.or(scan.left_only);
        right_only = right_only.or(scan.right_only);
        known_assoc = known_assoc.or(scan.known_assoc);
    }
    match (&left_only, &right_only) {
        (Some(l), Some(r)) => {
            rb.witness(format!("not right-inclusive: {l}"));
            rb.witness(format!("not left-inclusive: {r}"));
            rb.witness("not associative: both one-sided witnesses above".to_string());
        }
        _ => {
            rb.counterexample(
                "claims 'not associative / not inclusive' have no witness within bounds"
                    .to_string(),
            );
        }
    }
    if let Some(text) = known_assoc {
        rb.note(text);
    }
    Ok(rb.finish())
}

/// If the φ-pair products of u and w commute as sets, bi-catenation
/// associates on every middle word v.
pub fn assoc_sufficient(
    phi: &Involution,
    bounds: &Bounds,
) -> Result<VerificationReport, OracleError> {
    let len = bounds.word_len.min(3);
    let n = domain_size(phi.alphabet().size(), len, false);
    bounds.check_budget(n.saturating_pow(3).saturating_mul(128))?;
    let mut rb = ReportBuilder::new("assoc_sufficient", phi);
    rb.bound("word_len", len);
    let alpha = phi.alphabet();
    let words = words_up_to(alpha, len, false);
    let outcomes: Vec<Result<u64, String>> = words
        .par_iter()
        .map(|u| {
            let mut premise_held = 0u64;
            for w in &words {
                let uw = phi_pair(phi, u).product(&phi_pair(phi, w));
                let wu = phi_pair(phi, w).product(&phi_pair(phi, u));
                if uw != wu {
                    continue;
                }
                for v in &words {
                    premise_held += 1;
                    let uv = strong_bicat(phi, u, v);
                    let left: WordSet = uv
                        .iter()
                        .flat_map(|z| strong_bicat(phi, z, w).iter().cloned().collect::<Vec<_>>())
                        .collect();
                    let right: WordSet = strong_bicat(phi, v, w)
                        .iter()
                        .flat_map(|z| strong_bicat(phi, u, z).iter().cloned().collect::<Vec<_>>())
                        .collect();
                    if left != right {
                        return Err(format!(
                            "u={} v={} w={}: pair products commute but triple products differ",
                            fmt(alpha, u),
                            fmt(alpha, v),
                            fmt(alpha, w)
                        ));
                    }
                }
            }
            Ok(premise_held)
        })
        .collect();
    rb.cases((words.len() as u64).saturating_pow(3));
    let mut held = 0u64;
    for o in outcomes {
        match o {
            Ok(n) => held += n,
            Err(c) => {
                rb.counterexample(c);
            }
        }
    }
    rb.note(format!("premise held on {held} triples"));
    Ok(rb.finish())
}
