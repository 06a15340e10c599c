use thiserror::Error;

/// Errors shared by all word, language and automaton operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must be a non-empty list of distinct letters (`_` is reserved)")]
    BadAlphabet,
    #[error("letter `{0}` is not part of the alphabet")]
    UnknownLetter(String),
    #[error("mapping is not an involution: `{0}` -> `{1}` but `{1}` -> `{2}`")]
    NonInvolution(String, String, String),
    #[error("letter `{0}` has no image under the mapping")]
    PartialMapping(String),
    #[error("letter `{0}` is mapped more than once")]
    DuplicateMapping(String),
    #[error("inputs are defined over different alphabets")]
    AlphabetMismatch,
    #[error("operation requires an antimorphic involution")]
    KindMismatch,
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("words do not satisfy uv = vw")]
    NotConjugate,
    #[error("words do not satisfy the required equation")]
    EquationFails,
    #[error("language must not contain the empty word")]
    EmptyWordInLanguage,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("parse error at position {position}: {message}")]
    WordParse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
