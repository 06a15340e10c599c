use crate::error::{Error, Result};
use crate::word::Word;

/// Index of a letter within its [`Alphabet`]. The ordering fixed at alphabet
/// construction is the one used for every canonical ordering downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, ordered set of distinct letters. Letter names may be longer than
/// one character; such names are treated atomically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::BadAlphabet);
        }
        for (i, l) in letters.iter().enumerate() {
            // `_` denotes the empty word in all word I/O and cannot be a letter.
            if l.is_empty() || l == "_" || l.contains(char::is_whitespace) {
                return Err(Error::BadAlphabet);
            }
            if letters[..i].contains(l) {
                return Err(Error::BadAlphabet);
            }
        }
        if letters.len() > u16::MAX as usize {
            return Err(Error::BadAlphabet);
        }
        Ok(Alphabet { letters })
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len()).map(|i| Letter(i as u16))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().map(|s| s.as_str())
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.letters
            .iter()
            .position(|l| l == name)
            .map(|i| Letter(i as u16))
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.letters[l.index()]
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|l| l.index() < self.letters.len())
    }

    /// Parses a word. `_` denotes the empty word. Letters are matched
    /// greedily, longest name first, so multi-character letters work.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text == "_" {
            return Ok(Word::empty());
        }
        let mut order: Vec<usize> = (0..self.letters.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.letters[i].len()));
        let mut out = Vec::new();
        let mut rest = text;
        let mut pos = 0;
        'outer: while !rest.is_empty() {
            for &i in &order {
                if let Some(tail) = rest.strip_prefix(self.letters[i].as_str()) {
                    out.push(Letter(i as u16));
                    pos += self.letters[i].len();
                    rest = tail;
                    continue 'outer;
                }
            }
            return Err(Error::WordParse {
                position: pos,
                message: format!("no alphabet letter matches `{rest}`"),
            });
        }
        Ok(Word::from_letters(out))
    }

    /// Renders a word; the empty word becomes `_`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "_".to_string();
        }
        w.letters().iter().map(|&l| self.name(l)).collect()
    }
}
