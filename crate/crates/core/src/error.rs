use thiserror::Error;

/// Errors raised by the word, morphism, avoidance and complexity modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be between 1 and {max}, got {size}")]
    AlphabetSize { size: usize, max: usize },

    #[error("alphabet mismatch: expected size {expected}, found {found}")]
    AlphabetMismatch { expected: usize, found: usize },

    #[error("symbol {symbol} is outside an alphabet of size {size}")]
    SymbolOutOfRange { symbol: u32, size: usize },

    #[error("invalid character {ch:?} at position {position} for an alphabet of size {size}")]
    InvalidCharacter { position: usize, ch: char, size: usize },

    #[error("text rendering needs an alphabet of at most 26 letters, got {0}")]
    NotRenderable(usize),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("block count k must be at least 2, got {0}")]
    BlockCount(usize),

    #[error("invalid block-length bounds: m_min = {m_min}, m_max = {m_max}")]
    BlockLengthBounds { m_min: usize, m_max: usize },

    #[error("occurrence at {start} with m = {m}, k = {k} does not fit in a word of length {len}")]
    OccurrenceOutOfBounds { start: usize, m: usize, k: usize, len: usize },

    #[error("occurrence at {start} with m = {m}, k = {k} is not a twisted repetition")]
    NotARepetition { start: usize, m: usize, k: usize },

    #[error("factor length {k} out of range 1..={len}")]
    FactorLength { k: usize, len: usize },

    #[error("fit window [{lo}, {hi}] is invalid for a profile stable up to {stable_upto}")]
    FitWindow { lo: usize, hi: usize, stable_upto: usize },

    #[error("entropy estimate needs a stable horizon of at least 2, got {0}")]
    ShortHorizon(usize),

    #[error("malformed binary word: {0}")]
    BinaryFormat(String),

    #[error("invalid campaign parameters: {0}")]
    Campaign(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
