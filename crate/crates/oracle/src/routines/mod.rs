pub mod bicat;
pub mod conjugacy;
pub mod equations;
pub mod langs;
pub mod words;

use bicat_core::{Alphabet, Word};

pub(crate) fn fmt(alpha: &Alphabet, w: &Word) -> String {
    alpha.format_word(w)
}

/// Exact size of the word domain |Σ|^1 + ... + |Σ|^max (plus λ).
pub(crate) fn domain_size(alphabet_size: usize, max_len: usize, include_empty: bool) -> u64 {
    let k = alphabet_size as u64;
    let mut total: u64 = if include_empty { 1 } else { 0 };
    let mut level = 1u64;
    for _ in 0..max_len {
        level = level.saturating_mul(k);
        total = total.saturating_add(level);
    }
    total
}
