#![allow(dead_code)]

use proptest::prelude::*;
use twisted_words::{Alphabet, Permutation, Word};

pub fn alpha(n: usize) -> Alphabet {
    Alphabet::new(n).unwrap()
}

/// A random word over an alphabet of size `n`.
pub fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n as u32, 0..=max_len)
        .prop_map(move |v| Word::from_values(alpha(n), &v).unwrap())
}

/// A random permutation of `n` letters.
pub fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|img| Permutation::from_image(img).unwrap())
}
