//! Words over finite alphabets under morphic and antimorphic involutions,
//! the strong bi-catenation operation on words and languages, classical
//! word-equation solvers, and a small NFA engine that makes the regular
//! closure constructions and language-equation checks effective.

pub mod alphabet;
pub mod bicat;
pub mod combinatorics;
pub mod equation;
pub mod error;
pub mod involution;
pub mod lang;
pub mod nfa;
pub mod predicate;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use bicat::WordSet;
pub use error::{Error, Result};
pub use involution::{Involution, InvolutionKind};
pub use word::Word;
