//! Classical word-equation machinery: primitivity, conjugacy and
//! commutativity decompositions, and their θ-twisted variants.
//!
//! Every solver checks its defining equation first and then returns the
//! canonical decomposition with minimal |x|; substituting a result back into
//! its pattern always reproduces the inputs exactly.

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::word::Word;

/// Primitive root of a word: `root.repeat(exponent)` rebuilds the input and
/// `root` is not a proper power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

/// Solution of `uv = vw`: `u = xy`, `v = (xy)^k x`, `w = yx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacySplit {
    pub x: Word,
    pub y: Word,
    pub k: usize,
}

/// Solution of `uv = θ(v)w`: either a split `u = xy`, `w = yθ(x)` with x
/// non-empty, or the certificate `u = θ(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaConjugacy {
    Split { x: Word, y: Word },
    ThetaImage,
}

/// Solution of `uv = θ(v)u`: θ-palindromes `x` (possibly empty) and `y`
/// (non-empty) with `u = x(yx)^i`, `v = yx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaCommutation {
    pub x: Word,
    pub y: Word,
    pub i: usize,
}

/// Classification of a pair satisfying `xy = θ(y)θ(x)` and `yx = θ(x)θ(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PalindromicPair {
    /// `x = root^x_exp`, `y = root^y_exp` for a θ-palindromic root.
    CommonRoot {
        root: Word,
        x_exp: usize,
        y_exp: usize,
    },
    /// `x = [θ(s)s]^x_exp θ(s)`, `y = [sθ(s)]^y_exp s`.
    Skew {
        seed: Word,
        x_exp: usize,
        y_exp: usize,
    },
    NoMatch,
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(primitive_root(w)?.exponent == 1)
}

pub fn primitive_root(w: &Word) -> Result<PrimitiveRoot> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    for d in 1..n {
        if n % d == 0 && w.prefix(d).repeat(n / d) == *w {
            return Ok(PrimitiveRoot {
                root: w.prefix(d),
                exponent: n / d,
            });
        }
    }
    Ok(PrimitiveRoot {
        root: w.clone(),
        exponent: 1,
    })
}

/// Solves `uv = vw`. The split is forced arithmetically: with `r = |v| mod
/// |u|`, either `x` is the length-`r` prefix of `u` and `k = ⌊|v|/|u|⌋`, or
/// (`r = 0`) `x = u`, `y = λ`, `k = |v|/|u| - 1`.
pub fn conjugacy_split(u: &Word, v: &Word, w: &Word) -> Result<ConjugacySplit> {
    if u.is_empty() || v.is_empty() || w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.concat(v) != v.concat(w) {
        return Err(Error::NotConjugate);
    }
    let r = v.len() % u.len();
    let split = if r != 0 {
        ConjugacySplit {
            x: u.prefix(r),
            y: u.suffix_from(r),
            k: v.len() / u.len(),
        }
    } else {
        ConjugacySplit {
            x: u.clone(),
            y: Word::empty(),
            k: v.len() / u.len() - 1,
        }
    };
    debug_assert_eq!(split.x.concat(&split.y), *u);
    debug_assert_eq!(u.repeat(split.k).concat(&split.x), *v);
    debug_assert_eq!(split.y.concat(&split.x), *w);
    Ok(split)
}

/// If `xy = yx`, both are powers of the returned primitive word.
pub fn common_root(x: &Word, y: &Word) -> Result<Option<Word>> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    if x.concat(y) != y.concat(x) {
        return Ok(None);
    }
    Ok(Some(primitive_root(&x.concat(y))?.root))
}

/// True when `x` and `y` are powers of one common θ-palindromic word.
pub fn common_palindromic_root(theta: &Involution, x: &Word, y: &Word) -> Result<Option<Word>> {
    theta.require_antimorphic()?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let rx = primitive_root(x)?.root;
    if rx == primitive_root(y)?.root && theta.is_theta_palindrome(&rx)? {
        Ok(Some(rx))
    } else {
        Ok(None)
    }
}

/// Solves `uv = θ(v)w`. Splits are searched with |x| ascending; the
/// degenerate split x = u, y = λ is reported as the θ-image certificate.
pub fn theta_conjugacy_split(
    theta: &Involution,
    u: &Word,
    v: &Word,
    w: &Word,
) -> Result<ThetaConjugacy> {
    theta.require_antimorphic()?;
    if u.is_empty() || v.is_empty() || w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.concat(v) != theta.apply(v).concat(w) {
        return Err(Error::EquationFails);
    }
    for j in 1..=u.len() {
        let x = u.prefix(j);
        let y = u.suffix_from(j);
        if *w == y.concat(&theta.apply(&x)) {
            if j == u.len() {
                return Ok(ThetaConjugacy::ThetaImage);
            }
            return Ok(ThetaConjugacy::Split { x, y });
        }
    }
    unreachable!("uv = θ(v)w admits a split or u = θ(w)");
}

/// Solves `uv = θ(v)u`; returned `x`, `y` are verified θ-palindromes.
pub fn theta_commutation_split(theta: &Involution, u: &Word, v: &Word) -> Result<ThetaCommutation> {
    theta.require_antimorphic()?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.concat(v) != theta.apply(v).concat(u) {
        return Err(Error::EquationFails);
    }
    for xlen in 0..v.len() {
        let y = v.prefix(v.len() - xlen);
        let x = v.suffix_from(v.len() - xlen);
        if !theta.is_theta_palindrome(&x)? || !theta.is_theta_palindrome(&y)? {
            continue;
        }
        if u.len() < xlen || (u.len() - xlen) % v.len() != 0 {
            continue;
        }
        let i = (u.len() - xlen) / v.len();
        if *u == x.concat(&v.repeat(i)) {
            return Ok(ThetaCommutation { x, y, i });
        }
    }
    unreachable!("uv = θ(v)u always decomposes into θ-palindromes");
}

/// Classifies a pair under the simultaneous equations `xy = θ(y)θ(x)` and
/// `yx = θ(x)θ(y)`; `NoMatch` when the equations fail.
pub fn classify_palindromic_pair(
    theta: &Involution,
    x: &Word,
    y: &Word,
) -> Result<PalindromicPair> {
    theta.require_antimorphic()?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let tx = theta.apply(x);
    let ty = theta.apply(y);
    if x.concat(y) != ty.concat(&tx) || y.concat(x) != tx.concat(&ty) {
        return Ok(PalindromicPair::NoMatch);
    }
    let rx = primitive_root(x)?;
    let ry = primitive_root(y)?;
    if rx.root == ry.root && theta.is_theta_palindrome(&rx.root)? {
        return Ok(PalindromicPair::CommonRoot {
            root: rx.root,
            x_exp: rx.exponent,
            y_exp: ry.exponent,
        });
    }
    for d in 1..=y.len() {
        if y.len() % d != 0 || (y.len() / d) % 2 != 1 {
            continue;
        }
        if x.len() % d != 0 || (x.len() / d) % 2 != 1 {
            continue;
        }
        let s = y.prefix(d);
        let ts = theta.apply(&s);
        let k = (y.len() / d - 1) / 2;
        let i = (x.len() / d - 1) / 2;
        if *y == s.concat(&ts).repeat(k).concat(&s) && *x == ts.concat(&s).repeat(i).concat(&ts) {
            return Ok(PalindromicPair::Skew {
                seed: s,
                x_exp: i,
                y_exp: k,
            });
        }
    }
    Ok(PalindromicPair::NoMatch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::involution::InvolutionKind;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn w(alpha: &Alphabet, s: &str) -> Word {
        alpha.parse_word(s).unwrap()
    }

    /// Antimorphic involution fixing every letter, i.e. plain reversal.
    fn theta_id() -> Involution {
        Involution::new(ab(), &[("a", "a"), ("b", "b")], InvolutionKind::Antimorphic).unwrap()
    }

    fn theta_swap() -> Involution {
        Involution::new(ab(), &[("a", "b")], InvolutionKind::Antimorphic).unwrap()
    }

    #[test]
    fn primitivity() {
        let alpha = ab();
        assert!(is_primitive(&w(&alpha, "ab")).unwrap());
        assert!(!is_primitive(&w(&alpha, "abab")).unwrap());
        assert!(is_primitive(&w(&alpha, "a")).unwrap());
        assert_eq!(is_primitive(&Word::empty()).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn roots() {
        let alpha = ab();
        let r = primitive_root(&w(&alpha, "abab")).unwrap();
        assert_eq!((r.root, r.exponent), (w(&alpha, "ab"), 2));
        let r = primitive_root(&w(&alpha, "a")).unwrap();
        assert_eq!((r.root, r.exponent), (w(&alpha, "a"), 1));
        let r = primitive_root(&w(&alpha, "aaa")).unwrap();
        assert_eq!((r.root, r.exponent), (w(&alpha, "a"), 3));
    }

    #[test]
    fn root_of_root_is_itself() {
        let alpha = ab();
        for s in ["ab", "aab", "ba"] {
            let r = primitive_root(&w(&alpha, s)).unwrap();
            let rr = primitive_root(&r.root).unwrap();
            assert_eq!(rr.root, r.root);
            assert_eq!(rr.exponent, 1);
        }
    }

    #[test]
    fn conjugacy_splits() {
        let alpha = ab();
        let s = conjugacy_split(&w(&alpha, "ab"), &w(&alpha, "a"), &w(&alpha, "ba")).unwrap();
        assert_eq!((s.x, s.y, s.k), (w(&alpha, "a"), w(&alpha, "b"), 0));
        let s = conjugacy_split(&w(&alpha, "ab"), &w(&alpha, "aba"), &w(&alpha, "ba")).unwrap();
        assert_eq!((s.x, s.y, s.k), (w(&alpha, "a"), w(&alpha, "b"), 1));
        // |v| a multiple of |u|: x = u, y = λ, and reconstruction still holds
        let s = conjugacy_split(&w(&alpha, "a"), &w(&alpha, "a"), &w(&alpha, "a")).unwrap();
        assert_eq!((s.x, s.y, s.k), (w(&alpha, "a"), Word::empty(), 0));
        assert_eq!(
            conjugacy_split(&w(&alpha, "ab"), &w(&alpha, "b"), &w(&alpha, "ba")).unwrap_err(),
            Error::NotConjugate
        );
    }

    #[test]
    fn common_roots() {
        let alpha = ab();
        assert_eq!(
            common_root(&w(&alpha, "abab"), &w(&alpha, "ab")).unwrap(),
            Some(w(&alpha, "ab"))
        );
        assert_eq!(common_root(&w(&alpha, "a"), &w(&alpha, "b")).unwrap(), None);
        assert_eq!(
            common_root(&w(&alpha, "a"), &w(&alpha, "a")).unwrap(),
            Some(w(&alpha, "a"))
        );
    }

    #[test]
    fn theta_conjugacy_prefers_proper_split() {
        // unary alphabet: the only split of u = a is the degenerate x = u,
        // y = λ one, which is the same statement as u = θ(w)
        let alpha = Alphabet::new(["a"]).unwrap();
        let th =
            Involution::new(alpha.clone(), &[("a", "a")], InvolutionKind::Antimorphic).unwrap();
        let a = alpha.parse_word("a").unwrap();
        assert_eq!(
            theta_conjugacy_split(&th, &a, &a, &a).unwrap(),
            ThetaConjugacy::ThetaImage
        );

        // u = θ(w) with v a θ-palindrome and no proper split
        let th = theta_swap();
        let alpha = ab();
        assert_eq!(
            theta_conjugacy_split(&th, &w(&alpha, "ab"), &w(&alpha, "ab"), &w(&alpha, "ab"))
                .unwrap(),
            ThetaConjugacy::ThetaImage
        );

        // a proper split case over the swap involution
        let th = theta_swap();
        let alpha = ab();
        // u=aab, v=b, w=abb: uv = aabb = θ(b)·abb = a·abb ✓
        let res = theta_conjugacy_split(&th, &w(&alpha, "aab"), &w(&alpha, "b"), &w(&alpha, "abb"))
            .unwrap();
        assert_eq!(
            res,
            ThetaConjugacy::Split {
                x: w(&alpha, "a"),
                y: w(&alpha, "ab")
            }
        );
    }

    #[test]
    fn theta_conjugacy_exhaustive_small() {
        // every triple satisfying uv = θ(v)w decomposes, and both branch kinds
        // appear within length 3
        let th = theta_swap();
        let alpha = ab();
        let words = all_words(&alpha, 3);
        let mut splits = 0;
        let mut images = 0;
        for u in &words {
            for v in &words {
                let lhs = u.concat(v);
                let tv = th.apply(v);
                if lhs.len() < tv.len() || !lhs.starts_with(&tv) {
                    continue;
                }
                let ww = lhs.suffix_from(tv.len());
                if ww.is_empty() {
                    continue;
                }
                match theta_conjugacy_split(&th, u, v, &ww).unwrap() {
                    ThetaConjugacy::Split { x, y } => {
                        assert_eq!(x.concat(&y), *u);
                        assert_eq!(y.concat(&th.apply(&x)), ww);
                        splits += 1;
                    }
                    ThetaConjugacy::ThetaImage => {
                        assert_eq!(th.apply(&ww), *u);
                        images += 1;
                    }
                }
            }
        }
        assert!(splits > 0 && images > 0);
    }

    #[test]
    fn theta_commutation_examples() {
        let alpha = ab();
        let th = theta_id();
        // u=aba, v=ba: aba·ba = θ(ba)·aba = ab·aba
        let d = theta_commutation_split(&th, &w(&alpha, "aba"), &w(&alpha, "ba")).unwrap();
        assert_eq!(
            (d.x.clone(), d.y.clone(), d.i),
            (w(&alpha, "a"), w(&alpha, "b"), 1)
        );
        assert!(th.is_theta_palindrome(&d.x).unwrap());
        assert!(th.is_theta_palindrome(&d.y).unwrap());

        let alpha1 = Alphabet::new(["a"]).unwrap();
        let th1 =
            Involution::new(alpha1.clone(), &[("a", "a")], InvolutionKind::Antimorphic).unwrap();
        let d = theta_commutation_split(
            &th1,
            &alpha1.parse_word("a").unwrap(),
            &alpha1.parse_word("aa").unwrap(),
        )
        .unwrap();
        assert_eq!(
            (d.x, d.y, d.i),
            (
                alpha1.parse_word("a").unwrap(),
                alpha1.parse_word("a").unwrap(),
                0
            )
        );

        let dna = Involution::dna();
        let at = dna.alphabet().parse_word("AT").unwrap();
        let cgat = dna.alphabet().parse_word("CGAT").unwrap();
        let d = theta_commutation_split(&dna, &at, &cgat).unwrap();
        assert_eq!(d.x, dna.alphabet().parse_word("AT").unwrap());
        assert_eq!(d.y, dna.alphabet().parse_word("CG").unwrap());
        assert_eq!(d.i, 0);
    }

    #[test]
    fn palindromic_pair_classification() {
        let alpha = ab();
        let th = theta_id();
        assert_eq!(
            classify_palindromic_pair(&th, &w(&alpha, "aba"), &w(&alpha, "abaaba")).unwrap(),
            PalindromicPair::CommonRoot {
                root: w(&alpha, "aba"),
                x_exp: 1,
                y_exp: 2
            }
        );
        let th = theta_swap();
        assert_eq!(
            classify_palindromic_pair(&th, &w(&alpha, "b"), &w(&alpha, "a")).unwrap(),
            PalindromicPair::Skew {
                seed: w(&alpha, "a"),
                x_exp: 0,
                y_exp: 0
            }
        );
        let th = theta_id();
        assert_eq!(
            classify_palindromic_pair(&th, &w(&alpha, "a"), &w(&alpha, "b")).unwrap(),
            PalindromicPair::NoMatch
        );
    }

    /// All non-empty words up to the given length, shortlex order.
    fn all_words(alpha: &Alphabet, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for wrd in &level {
                for l in alpha.letters() {
                    next.push(wrd.concat(&Word::from_letters(vec![l])));
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out.retain(|x| !x.is_empty());
        out
    }
}
