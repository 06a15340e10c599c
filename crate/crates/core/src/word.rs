use std::cmp::Ordering;

use crate::alphabet::Letter;

/// A finite sequence of alphabet letters; the empty sequence is the empty
/// word. Words order shortlex: by length first, then letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn count(&self, a: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == a).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The prefix holding the first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            letters: self.letters[..n].to_vec(),
        }
    }

    /// The suffix starting at position `n`.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word {
            letters: self.letters[n..].to_vec(),
        }
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.letters.ends_with(&other.letters)
    }

    /// All rotations of the word, including the word itself.
    pub fn rotations(&self) -> Vec<Word> {
        (0..self.len().max(1))
            .map(|i| {
                self.suffix_from(i.min(self.len()))
                    .concat(&self.prefix(i.min(self.len())))
            })
            .collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
