//! Alphabets, symbols and finite words.
//!
//! Symbols are plain integers `0..N`. The textual form maps symbol `i` to
//! the `i`-th lowercase Latin letter and is only available for `N <= 26`;
//! larger alphabets are handled internally and through the binary format.

use std::fmt;
use std::ops::{Deref, Range};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest supported alphabet. Keeps permutation orders inside `u128`.
pub const MAX_ALPHABET: usize = 1024;

/// Largest alphabet with a textual rendering.
pub const MAX_RENDERABLE: usize = 26;

/// A finite alphabet `{0, 1, ..., N-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::AlphabetSize { size, max: MAX_ALPHABET });
        }
        Ok(Alphabet { size })
    }

    #[inline]
    pub fn size(self) -> usize {
        self.size
    }

    pub fn contains(self, s: Symbol) -> bool {
        (s.0 as usize) < self.size
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        (0..self.size as u32).map(Symbol)
    }

    pub fn symbol(self, value: u32) -> Result<Symbol> {
        let s = Symbol(value);
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::SymbolOutOfRange { symbol: value, size: self.size })
        }
    }

    pub(crate) fn check_same(self, other: Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch { expected: self.size, found: other.size })
        }
    }
}

/// A single letter, identified by its index in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(transparent)]
pub struct Symbol(pub u32);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The lowercase letter for this symbol, if it has one.
    pub fn letter(self) -> Option<char> {
        if self.index() < MAX_RENDERABLE {
            Some((b'a' + self.0 as u8) as char)
        } else {
            None
        }
    }

    pub fn from_letter(ch: char) -> Option<Symbol> {
        if ch.is_ascii_lowercase() {
            Some(Symbol(ch as u32 - 'a' as u32))
        } else {
            None
        }
    }
}

/// A finite word over an [`Alphabet`]. The empty word is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|s| !alphabet.contains(**s)) {
            return Err(Error::SymbolOutOfRange { symbol: bad.0, size: alphabet.size() });
        }
        Ok(Word { symbols, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { symbols: Vec::new(), alphabet }
    }

    /// Builds a word from raw symbol values.
    pub fn from_values(alphabet: Alphabet, values: &[u32]) -> Result<Self> {
        Word::new(alphabet, values.iter().copied().map(Symbol).collect())
    }

    /// Callers guarantee every symbol lies in the alphabet.
    pub(crate) fn from_trusted(alphabet: Alphabet, symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|s| alphabet.contains(*s)));
        Word { symbols, alphabet }
    }

    /// Parses a word in letter form (`a` is symbol 0) over `alphabet`.
    ///
    /// ```
    /// use twisted_words::{Alphabet, Word};
    /// let w = Word::parse("abbc", Alphabet::new(3)?)?;
    /// assert_eq!(w.values(), vec![0, 1, 1, 2]);
    /// assert!(Word::parse("abd", Alphabet::new(3)?).is_err());
    /// # Ok::<(), twisted_words::Error>(())
    /// ```
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            match Symbol::from_letter(ch) {
                Some(s) if alphabet.contains(s) => symbols.push(s),
                _ => {
                    return Err(Error::InvalidCharacter { position, ch, size: alphabet.size() })
                }
            }
        }
        Ok(Word { symbols, alphabet })
    }

    /// Parses a word, taking the alphabet size as `max symbol + 1`.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let max = text
            .chars()
            .enumerate()
            .map(|(position, ch)| {
                Symbol::from_letter(ch).ok_or(Error::InvalidCharacter {
                    position,
                    ch,
                    size: MAX_RENDERABLE,
                })
            })
            .try_fold(0u32, |acc, s| s.map(|s| acc.max(s.0)))?;
        Word::parse(text, Alphabet::new(max as usize + 1)?)
    }

    pub fn render(&self) -> Result<String> {
        if self.alphabet.size() > MAX_RENDERABLE {
            return Err(Error::NotRenderable(self.alphabet.size()));
        }
        Ok(self.symbols.iter().map(|s| s.letter().expect("checked alphabet")).collect())
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn values(&self) -> Vec<u32> {
        self.symbols.iter().map(|s| s.0).collect()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// The factor occupying `range`.
    pub fn factor(&self, range: Range<usize>) -> Word {
        Word { symbols: self.symbols[range].to_vec(), alphabet: self.alphabet }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0..len)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.alphabet.check_same(other.alphabet)?;
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word { symbols, alphabet: self.alphabet })
    }

    /// The letterwise image `δ(w[0]) δ(w[1]) ...`.
    ///
    /// ```
    /// use twisted_words::{Alphabet, Permutation, Word};
    /// let abc = Alphabet::new(3)?;
    /// let delta = Permutation::cyclic_shift(abc);
    /// let x0 = Word::parse("ab", abc)?;
    /// assert_eq!(x0.twist(&delta)?.render()?, "bc");
    /// assert_eq!(x0.twist(&delta.power(2))?.render()?, "ca");
    /// # Ok::<(), twisted_words::Error>(())
    /// ```
    pub fn twist(&self, delta: &Permutation) -> Result<Word> {
        self.alphabet.check_same(delta.alphabet())?;
        Ok(Word {
            symbols: self.symbols.iter().map(|&s| delta.apply(s)).collect(),
            alphabet: self.alphabet,
        })
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render() {
            Ok(s) => f.write_str(&s),
            Err(_) => {
                let parts: Vec<String> = self.symbols.iter().map(|s| s.0.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Free-function form of [`Word::twist`].
pub fn twist(w: &Word, delta: &Permutation) -> Result<Word> {
    w.twist(delta)
}

/// Binary word encoding: an 8-byte little-endian length followed by one
/// byte per symbol. Requires an alphabet of at most 256 letters.
pub mod binary {
    use super::*;

    pub fn encode(w: &Word) -> Result<Vec<u8>> {
        if w.alphabet().size() > 256 {
            return Err(Error::BinaryFormat(format!(
                "alphabet of size {} does not fit in one byte",
                w.alphabet().size()
            )));
        }
        let mut out = Vec::with_capacity(8 + w.len());
        out.extend_from_slice(&(w.len() as u64).to_le_bytes());
        out.extend(w.iter().map(|s| s.0 as u8));
        Ok(out)
    }

    /// Decodes a binary word. With no explicit alphabet the size is
    /// inferred as `max symbol + 1`.
    pub fn decode(bytes: &[u8], alphabet: Option<Alphabet>) -> Result<Word> {
        let header: [u8; 8] = bytes
            .get(..8)
            .and_then(|h| h.try_into().ok())
            .ok_or_else(|| Error::BinaryFormat("missing 8-byte length header".into()))?;
        let len = u64::from_le_bytes(header);
        let body = &bytes[8..];
        if body.len() as u64 != len {
            return Err(Error::BinaryFormat(format!(
                "header declares {len} symbols but {} bytes follow",
                body.len()
            )));
        }
        let alphabet = match alphabet {
            Some(a) => a,
            None => Alphabet::new(body.iter().copied().max().map_or(1, |m| m as usize + 1))?,
        };
        Word::new(alphabet, body.iter().map(|&b| Symbol(b as u32)).collect())
    }
}

/// Decodes a word file in either the text or the binary format.
///
/// A text file is a single line of lowercase letters with an optional
/// trailing newline; anything else is read as binary.
pub fn decode_word_file(bytes: &[u8], alphabet: Option<Alphabet>) -> Result<Word> {
    let trimmed = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let trimmed = trimmed.strip_suffix(b"\r").unwrap_or(trimmed);
    if trimmed.iter().all(u8::is_ascii_lowercase) {
        let text = std::str::from_utf8(trimmed).expect("ascii");
        match alphabet {
            Some(a) => Word::parse(text, a),
            None => Word::parse_inferred(text),
        }
    } else {
        binary::decode(bytes, alphabet)
    }
}
