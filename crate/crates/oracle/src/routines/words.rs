//! Exhaustive verification of the word-equation lemmas: each routine
//! enumerates all tuples up to the bound, filters by the hypothesis
//! equation, and asserts the stated structural conclusion via the solvers
//! and form matchers.

use bicat_core::combinatorics::{
    common_root, conjugacy_split, primitive_root, theta_commutation_split, theta_conjugacy_split,
    PalindromicPair, ThetaConjugacy,
};
use bicat_core::lang::words_up_to;
use bicat_core::{Involution, Word};
use rayon::prelude::*;

use super::{domain_size, fmt};
use crate::forms::common_power_pair;
use crate::{Bounds, OracleError, ReportBuilder, VerificationReport};

fn pair_scan<F>(
    name: &str,
    theta: &Involution,
    bounds: &Bounds,
    per_pair_cost: u64,
    check: F,
) -> Result<VerificationReport, OracleError>
where
    F: Fn(&Word, &Word) -> Option<Result<String, String>> + Sync,
{
    let n = domain_size(theta.alphabet().size(), bounds.word_len, false);
    bounds.check_budget(n.saturating_mul(n).saturating_mul(per_pair_cost))?;
    let mut rb = ReportBuilder::new(name, theta);
    rb.bound("word_len", bounds.word_len);
    let words = words_up_to(theta.alphabet(), bounds.word_len, false);
    let outcomes: Vec<Result<String, String>> = words
        .par_iter()
        .flat_map_iter(|x| words.iter().filter_map(|y| check(x, y)))
        .collect();
    rb.cases((words.len() * words.len()) as u64);
    for o in outcomes {
        match o {
            Ok(w) => {
                rb.witness(w);
            }
            Err(c) => {
                rb.counterexample(c);
            }
        }
    }
    Ok(rb.finish())
}

/// uv = vw decomposes as u = xy, v = (xy)^k x, w = yx; cross-checked against
/// rotation conjugacy.
pub fn lemconj(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet();
    let n = domain_size(alpha.size(), bounds.word_len, false);
    bounds.check_budget(
        n.saturating_mul(n)
            .saturating_mul(2 * bounds.word_len as u64 + 8),
    )?;
    let mut rb = ReportBuilder::new("lemconj", theta);
    rb.bound("word_len", bounds.word_len);
    let words = words_up_to(alpha, bounds.word_len, false);
    // enumerate (u, v) and derive w from uv = vw, which forces w exactly
    let outcomes: Vec<Result<u64, String>> = words
        .par_iter()
        .map(|u| {
            let mut solved = 0u64;
            for v in &words {
                let uv = u.concat(v);
                if !uv.starts_with(v) {
                    continue;
                }
                let w = uv.suffix_from(v.len());
                if w.is_empty() || uv != v.concat(&w) {
                    continue;
                }
                match conjugacy_split(u, v, &w) {
                    Ok(split) => {
                        let ok = split.x.concat(&split.y) == *u
                            && u.repeat(split.k).concat(&split.x) == *v
                            && split.y.concat(&split.x) == w
                            && !split.x.is_empty();
                        if !ok {
                            return Err(format!(
                                "u={} v={} w={}: decomposition does not reconstruct",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, &w)
                            ));
                        }
                        if !u.rotations().contains(&w) {
                            return Err(format!(
                                "u={} w={}: uv=vw solvable but w is not a rotation of u",
                                fmt(alpha, u),
                                fmt(alpha, &w)
                            ));
                        }
                        solved += 1;
                    }
                    Err(e) => {
                        return Err(format!(
                            "u={} v={} w={}: solver failed: {e}",
                            fmt(alpha, u),
                            fmt(alpha, v),
                            fmt(alpha, &w)
                        ))
                    }
                }
            }
            Ok(solved)
        })
        .collect();
    rb.cases((words.len() * words.len()) as u64);
    let mut solved = 0u64;
    for o in outcomes {
        match o {
            Ok(n) => solved += n,
            Err(c) => {
                rb.counterexample(c);
            }
        }
    }
    rb.note(format!("hypothesis held on {solved} pairs"));
    Ok(rb.finish())
}

/// xy = yx iff both are powers of a common word.
pub fn lpow(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    pair_scan("lpow", theta, bounds, 8, move |x, y| {
        let commute = x.concat(y) == y.concat(x);
        match common_root(x, y) {
            Ok(Some(root)) => {
                if !commute {
                    return Some(Err(format!(
                        "x={} y={}: common root without commutation",
                        fmt(&alpha, x),
                        fmt(&alpha, y)
                    )));
                }
                let rx = x.len() / root.len();
                let ry = y.len() / root.len();
                if root.repeat(rx) != *x || root.repeat(ry) != *y {
                    return Some(Err(format!(
                        "x={} y={}: root {} does not reconstruct",
                        fmt(&alpha, x),
                        fmt(&alpha, y),
                        fmt(&alpha, &root)
                    )));
                }
                Some(Ok(format!(
                    "x={} y={} root={}",
                    fmt(&alpha, x),
                    fmt(&alpha, y),
                    fmt(&alpha, &root)
                )))
            }
            Ok(None) => commute.then(|| {
                Err(format!(
                    "x={} y={}: commute but no common root found",
                    fmt(&alpha, x),
                    fmt(&alpha, y)
                ))
            }),
            Err(e) => Some(Err(format!("solver error: {e}"))),
        }
    })
}

/// yxx = xxy forces powers of a common word.
pub fn reflem7(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    pair_scan("reflem7", theta, bounds, 8, move |x, y| {
        let xx = x.concat(x);
        if y.concat(&xx) != xx.concat(y) {
            return None;
        }
        match (primitive_root(x), primitive_root(y)) {
            (Ok(rx), Ok(ry)) if rx.root == ry.root => Some(Ok(format!(
                "x={} y={} root={}",
                fmt(&alpha, x),
                fmt(&alpha, y),
                fmt(&alpha, &rx.root)
            ))),
            _ => Some(Err(format!(
                "x={} y={}: yxx=xxy but no common root",
                fmt(&alpha, x),
                fmt(&alpha, y)
            ))),
        }
    })
}

/// uv = θ(v)w splits as u = xy, w = yθ(x), or certifies u = θ(w).
pub fn gg1a(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet();
    let n = domain_size(alpha.size(), bounds.word_len, false);
    bounds.check_budget(
        n.saturating_mul(n)
            .saturating_mul(2 * bounds.word_len as u64 + 8),
    )?;
    let mut rb = ReportBuilder::new("gg1a", theta);
    rb.bound("word_len", bounds.word_len);
    let words = words_up_to(alpha, bounds.word_len, false);
    let outcomes: Vec<Result<(u64, u64), String>> = words
        .par_iter()
        .map(|u| {
            let mut splits = 0u64;
            let mut images = 0u64;
            for v in &words {
                let uv = u.concat(v);
                let tv = theta.apply(v);
                if !uv.starts_with(&tv) {
                    continue;
                }
                let w = uv.suffix_from(tv.len());
                if w.is_empty() {
                    continue;
                }
                match theta_conjugacy_split(theta, u, v, &w) {
                    Ok(ThetaConjugacy::Split { x, y }) => {
                        if x.concat(&y) != *u || y.concat(&theta.apply(&x)) != w || x.is_empty() {
                            return Err(format!(
                                "u={} v={} w={}: split does not reconstruct",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, &w)
                            ));
                        }
                        splits += 1;
                    }
                    Ok(ThetaConjugacy::ThetaImage) => {
                        if theta.apply(&w) != *u {
                            return Err(format!(
                                "u={} v={} w={}: image certificate wrong",
                                fmt(alpha, u),
                                fmt(alpha, v),
                                fmt(alpha, &w)
                            ));
                        }
                        images += 1;
                    }
                    Err(e) => {
                        return Err(format!(
                            "u={} v={} w={}: {e}",
                            fmt(alpha, u),
                            fmt(alpha, v),
                            fmt(alpha, &w)
                        ))
                    }
                }
            }
            Ok((splits, images))
        })
        .collect();
    rb.cases((words.len() * words.len()) as u64);
    let (mut splits, mut images) = (0u64, 0u64);
    for o in outcomes {
        match o {
            Ok((s, i)) => {
                splits += s;
                images += i;
            }
            Err(c) => {
                rb.counterexample(c);
            }
        }
    }
    rb.note(format!(
        "split branch {splits} times, image branch {images} times"
    ));
    Ok(rb.finish())
}

/// uv = θ(v)u decomposes into θ-palindromes x, y with u = x(yx)^i, v = yx.
pub fn gg1b(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    pair_scan("gg1b", theta, bounds, 16, move |u, v| {
        if u.concat(v) != th.apply(v).concat(u) {
            return None;
        }
        match theta_commutation_split(&th, u, v) {
            Ok(d) => {
                let pal = th.is_theta_palindrome(&d.x).unwrap_or(false)
                    && th.is_theta_palindrome(&d.y).unwrap_or(false);
                let rebuilt =
                    d.y.concat(&d.x) == *v && d.x.concat(&v.repeat(d.i)) == *u && !d.y.is_empty();
                if pal && rebuilt {
                    Some(Ok(format!(
                        "u={} v={} x={} y={} i={}",
                        fmt(&alpha, u),
                        fmt(&alpha, v),
                        fmt(&alpha, &d.x),
                        fmt(&alpha, &d.y),
                        d.i
                    )))
                } else {
                    Some(Err(format!(
                        "u={} v={}: decomposition not palindromic or wrong",
                        fmt(&alpha, u),
                        fmt(&alpha, v)
                    )))
                }
            }
            Err(e) => Some(Err(format!(
                "u={} v={}: {e}",
                fmt(&alpha, u),
                fmt(&alpha, v)
            ))),
        }
    })
}

/// xy = θ(y)θ(x) and yx = θ(x)θ(y) force the common-palindromic-root or the
/// alternating skew form.
pub fn palpro1(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    pair_scan("palpro1", theta, bounds, 16, move |x, y| {
        let tx = th.apply(x);
        let ty = th.apply(y);
        if x.concat(y) != ty.concat(&tx) || y.concat(x) != tx.concat(&ty) {
            return None;
        }
        match bicat_core::combinatorics::classify_palindromic_pair(&th, x, y) {
            Ok(PalindromicPair::CommonRoot { root, x_exp, y_exp }) => {
                let ok = root.repeat(x_exp) == *x
                    && root.repeat(y_exp) == *y
                    && th.is_theta_palindrome(&root).unwrap_or(false);
                Some(if ok {
                    Ok(format!(
                        "x={} y={} common root {}",
                        fmt(&alpha, x),
                        fmt(&alpha, y),
                        fmt(&alpha, &root)
                    ))
                } else {
                    Err(format!(
                        "x={} y={}: root form wrong",
                        fmt(&alpha, x),
                        fmt(&alpha, y)
                    ))
                })
            }
            Ok(PalindromicPair::Skew { seed, x_exp, y_exp }) => {
                let ts = th.apply(&seed);
                let ok = *x == ts.concat(&seed).repeat(x_exp).concat(&ts)
                    && *y == seed.concat(&ts).repeat(y_exp).concat(&seed);
                Some(if ok {
                    Ok(format!(
                        "x={} y={} skew seed {}",
                        fmt(&alpha, x),
                        fmt(&alpha, y),
                        fmt(&alpha, &seed)
                    ))
                } else {
                    Err(format!(
                        "x={} y={}: skew form wrong",
                        fmt(&alpha, x),
                        fmt(&alpha, y)
                    ))
                })
            }
            Ok(PalindromicPair::NoMatch) => Some(Err(format!(
                "x={} y={}: equations hold but no structural form matches",
                fmt(&alpha, x),
                fmt(&alpha, y)
            ))),
            Err(e) => Some(Err(format!(
                "x={} y={}: {e}",
                fmt(&alpha, x),
                fmt(&alpha, y)
            ))),
        }
    })
}

/// xxθ(y) = θ(y)θ(x)x forces a common θ-palindromic root.
pub fn lus1(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    pair_scan("lus1", theta, bounds, 8, move |x, y| {
        let tx = th.apply(x);
        let ty = th.apply(y);
        if x.concat(x).concat(&ty) != ty.concat(&tx).concat(x) {
            return None;
        }
        match common_power_pair(&th, x, y, true) {
            Some((root, _, _)) => Some(Ok(format!(
                "x={} y={} palindromic root {}",
                fmt(&alpha, x),
                fmt(&alpha, y),
                fmt(&alpha, &root)
            ))),
            None => Some(Err(format!(
                "x={} y={}: equation holds but no common palindromic root",
                fmt(&alpha, x),
                fmt(&alpha, y)
            ))),
        }
    })
}

/// xxy = yxθ(x) or xxy = yθ(x)x forces a common θ-palindromic root.
pub fn reflem8(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    pair_scan("reflem8", theta, bounds, 8, move |x, y| {
        let tx = th.apply(x);
        let lhs = x.concat(x).concat(y);
        let first = lhs == y.concat(x).concat(&tx);
        let second = lhs == y.concat(&tx).concat(x);
        if !first && !second {
            return None;
        }
        match common_power_pair(&th, x, y, true) {
            Some((root, _, _)) => Some(Ok(format!(
                "x={} y={} palindromic root {}",
                fmt(&alpha, x),
                fmt(&alpha, y),
                fmt(&alpha, &root)
            ))),
            None => Some(Err(format!(
                "x={} y={}: equation holds but no common palindromic root",
                fmt(&alpha, x),
                fmt(&alpha, y)
            ))),
        }
    })
}

/// x(xy)^i = (yx)^iθ(x) or x(xy)^i = (yθ(x))^i x for some i ≥ 1 forces a
/// common θ-palindromic root.
pub fn refcor8(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    let max_exp = bounds.exponent.max(1);
    pair_scan("refcor8", theta, bounds, 8 * max_exp as u64, move |x, y| {
        let tx = th.apply(x);
        let mut hit = None;
        for i in 1..=max_exp {
            let lhs = x.concat(&x.concat(y).repeat(i));
            if lhs == y.concat(x).repeat(i).concat(&tx) || lhs == y.concat(&tx).repeat(i).concat(x)
            {
                hit = Some(i);
                break;
            }
        }
        let i = hit?;
        match common_power_pair(&th, x, y, true) {
            Some((root, _, _)) => Some(Ok(format!(
                "x={} y={} i={} palindromic root {}",
                fmt(&alpha, x),
                fmt(&alpha, y),
                i,
                fmt(&alpha, &root)
            ))),
            None => Some(Err(format!(
                "x={} y={} i={}: equation holds but no common palindromic root",
                fmt(&alpha, x),
                fmt(&alpha, y),
                i
            ))),
        }
    })
}

/// xy = θ(y)θ(x) and xθ(y) = yθ(x) force x = (αβ)^m, y = α(βα)^n with both
/// α, β θ-palindromes.
pub fn eqth3(theta: &Involution, bounds: &Bounds) -> Result<VerificationReport, OracleError> {
    let alpha = theta.alphabet().clone();
    let th = theta.clone();
    pair_scan("eqth3", theta, bounds, 32, move |x, y| {
        let tx = th.apply(x);
        let ty = th.apply(y);
        if x.concat(y) != ty.concat(&tx) || x.concat(&ty) != y.concat(&tx) {
            return None;
        }
        for m in 1..=x.len() {
            if x.len() % m != 0 {
                continue;
            }
            let d = x.len() / m;
            let block = x.prefix(d);
            if block.repeat(m) != *x {
                continue;
            }
            for split in 0..=d {
                let a = block.prefix(split);
                let b = block.suffix_from(split);
                let pal = th.is_theta_palindrome(&a).unwrap_or(false)
                    && th.is_theta_palindrome(&b).unwrap_or(false);
                if !pal {
                    continue;
                }
                if y.len() < a.len() || (y.len() - a.len()) % d != 0 {
                    continue;
                }
                let n = (y.len() - a.len()) / d;
                if *y == a.concat(&b.concat(&a).repeat(n)) {
                    return Some(Ok(format!(
                        "x={} y={} alpha={} beta={} m={m} n={n}",
                        fmt(&alpha, x),
                        fmt(&alpha, y),
                        fmt(&alpha, &a),
                        fmt(&alpha, &b)
                    )));
                }
            }
        }
        Some(Err(format!(
            "x={} y={}: equations hold but no alternating palindromic form",
            fmt(&alpha, x),
            fmt(&alpha, y)
        )))
    })
}
