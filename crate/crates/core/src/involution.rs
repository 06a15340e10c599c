//! Letter-level involutions extended to words, either as morphisms
//! (order-preserving) or antimorphisms (order-reversing, the shape of the
//! Watson-Crick complement).

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionKind {
    Morphic,
    Antimorphic,
}

impl InvolutionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionKind::Morphic => "morphic",
            InvolutionKind::Antimorphic => "antimorphic",
        }
    }
}

/// A validated involution on an alphabet: a bijection `map` with
/// `map(map(a)) = a` for every letter, tagged morphic or antimorphic.
/// Fixed points are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    alphabet: Alphabet,
    map: Vec<Letter>,
    kind: InvolutionKind,
}

impl Involution {
    /// Validates letter pairs into an involution. Every letter must receive
    /// exactly one image, and images must fold back onto their sources.
    pub fn new<S: AsRef<str>>(
        alphabet: Alphabet,
        pairs: &[(S, S)],
        kind: InvolutionKind,
    ) -> Result<Self> {
        let mut map: Vec<Option<Letter>> = vec![None; alphabet.size()];
        for (from, to) in pairs {
            let from = alphabet.letter(from.as_ref())?;
            let to = alphabet.letter(to.as_ref())?;
            for (src, dst) in [(from, to), (to, from)] {
                match map[src.index()] {
                    None => map[src.index()] = Some(dst),
                    Some(prev) if prev == dst => {}
                    Some(_) => return Err(Error::DuplicateMapping(alphabet.name(src).to_string())),
                }
            }
        }
        let map: Vec<Letter> = map
            .iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| Error::PartialMapping(alphabet.names().nth(i).unwrap().into()))
            })
            .collect::<Result<_>>()?;
        for l in alphabet.letters() {
            let image = map[l.index()];
            let back = map[image.index()];
            if back != l {
                return Err(Error::NonInvolution(
                    alphabet.name(l).to_string(),
                    alphabet.name(image).to_string(),
                    alphabet.name(back).to_string(),
                ));
            }
        }
        Ok(Involution {
            alphabet,
            map,
            kind,
        })
    }

    /// The Watson-Crick complement over {A,C,G,T}: A↔T, C↔G, antimorphic.
    pub fn dna() -> Self {
        let alphabet = Alphabet::new(["A", "C", "G", "T"]).unwrap();
        Involution::new(
            alphabet,
            &[("A", "T"), ("C", "G")],
            InvolutionKind::Antimorphic,
        )
        .unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn is_antimorphic(&self) -> bool {
        self.kind == InvolutionKind::Antimorphic
    }

    pub fn require_antimorphic(&self) -> Result<()> {
        if self.is_antimorphic() {
            Ok(())
        } else {
            Err(Error::KindMismatch)
        }
    }

    pub fn letter_image(&self, a: Letter) -> Letter {
        self.map[a.index()]
    }

    /// Applies the involution to a word: pointwise images, in reversed order
    /// for the antimorphic case. The empty word is fixed.
    pub fn apply(&self, w: &Word) -> Word {
        let mapped = w.letters().iter().map(|&l| self.map[l.index()]);
        let letters: Vec<Letter> = match self.kind {
            InvolutionKind::Morphic => mapped.collect(),
            InvolutionKind::Antimorphic => mapped.rev().collect(),
        };
        Word::from_letters(letters)
    }

    /// Whether `w = θ(w)`; defined for antimorphic involutions only.
    pub fn is_theta_palindrome(&self, w: &Word) -> Result<bool> {
        self.require_antimorphic()?;
        Ok(self.apply(w) == *w)
    }

    /// `|w|_a + |w|_{φ(a)}`, counting once when `φ(a) = a`.
    pub fn pair_count(&self, w: &Word, a: Letter) -> usize {
        let image = self.letter_image(a);
        if image == a {
            w.count(a)
        } else {
            w.count(a) + w.count(image)
        }
    }

    /// Deterministic one-line description used in reports.
    pub fn describe(&self) -> String {
        let mut pairs = Vec::new();
        for l in self.alphabet.letters() {
            let img = self.letter_image(l);
            if img == l {
                pairs.push(format!(
                    "{}->{}",
                    self.alphabet.name(l),
                    self.alphabet.name(l)
                ));
            } else if l < img {
                pairs.push(format!(
                    "{}<->{}",
                    self.alphabet.name(l),
                    self.alphabet.name(img)
                ));
            }
        }
        format!(
            "alphabet={}; map={}; kind={}",
            self.alphabet.names().collect::<Vec<_>>().join(" "),
            pairs.join(" "),
            self.kind.as_str()
        )
    }

    /// Parses the line-oriented involution file format:
    ///
    /// ```text
    /// alphabet: A C G T
    /// kind: antimorphic
    /// A <-> T
    /// C <-> G
    /// ```
    ///
    /// Fixed points are written `a -> a`. Unmapped letters are an error.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, alpha_line) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `alphabet:` line".into(),
        })?;
        let alpha = alpha_line.strip_prefix("alphabet:").ok_or(Error::Parse {
            line: line_no,
            message: "expected `alphabet: <letters>`".into(),
        })?;
        let alphabet = Alphabet::new(alpha.split_whitespace()).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let (line_no, kind_line) = lines.next().ok_or(Error::Parse {
            line: line_no,
            message: "missing `kind:` line".into(),
        })?;
        let kind = match kind_line.strip_prefix("kind:").map(str::trim) {
            Some("morphic") => InvolutionKind::Morphic,
            Some("antimorphic") => InvolutionKind::Antimorphic,
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected `kind: morphic` or `kind: antimorphic`".into(),
                })
            }
        };
        let mut pairs = Vec::new();
        for (line_no, line) in lines {
            pairs.push(parse_mapping(line, line_no)?);
        }
        Involution::new(alphabet, &pairs, kind)
    }

    /// Parses the inline grammar `a<->b c->c ... (morphic|antimorphic)`.
    /// The alphabet is the letters in order of first mention.
    pub fn parse_inline(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (kind_tok, mapping_toks) = tokens.split_last().ok_or(Error::Parse {
            line: 1,
            message: "empty involution spec".into(),
        })?;
        let kind = match *kind_tok {
            "morphic" => InvolutionKind::Morphic,
            "antimorphic" => InvolutionKind::Antimorphic,
            other => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected trailing `morphic` or `antimorphic`, got `{other}`"),
                })
            }
        };
        let mut letters: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        for tok in mapping_toks {
            let (from, to) = parse_mapping(tok, 1)?;
            for name in [&from, &to] {
                if !letters.contains(name) {
                    letters.push(name.clone());
                }
            }
            pairs.push((from, to));
        }
        let alphabet = Alphabet::new(letters).map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        })?;
        Involution::new(alphabet, &pairs, kind)
    }
}

fn parse_mapping(text: &str, line: usize) -> Result<(String, String)> {
    let (from, to) = text
        .split_once("<->")
        .or_else(|| text.split_once("->"))
        .ok_or(Error::Parse {
            line,
            message: format!("expected `a <-> b` or `a -> a`, got `{text}`"),
        })?;
    Ok((from.trim().to_string(), to.trim().to_string()))
}
