//! The cyclic shift morphism `a -> a σ(a)` and its fixed points.
//!
//! Since every image is two letters long and starts with its argument, the
//! fixed point `W` starting at a seed `a₀` satisfies `W[2i] = W[i]` and
//! `W[2i + 1] = σ(W[i])`. Unrolling the recurrence gives
//! `W[n] = σ^popcount(n)(a₀)`, which is what [`CyclicShiftMorphism::letter_at`]
//! evaluates.

use serde::{Deserialize, Serialize};

use crate::avoidance::{is_strong_repetition, Occurrence};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Alphabet, Symbol, Word};

/// `ψ(a) = a σ(a)` together with the seed letter of its fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicShiftMorphism {
    sigma: Permutation,
    seed: Symbol,
    /// `seed, σ(seed), σ²(seed), ...` until the orbit closes.
    orbit: Vec<Symbol>,
}

impl CyclicShiftMorphism {
    pub fn new(sigma: Permutation, seed: Symbol) -> Result<Self> {
        let alphabet = sigma.alphabet();
        alphabet.symbol(seed.0)?;
        let mut orbit = vec![seed];
        let mut x = sigma.apply(seed);
        while x != seed {
            orbit.push(x);
            x = sigma.apply(x);
        }
        Ok(CyclicShiftMorphism { sigma, seed, orbit })
    }

    /// The morphism for the canonical cycle `i -> i + 1 mod N`.
    pub fn canonical(alphabet: Alphabet, seed: Symbol) -> Result<Self> {
        Self::new(Permutation::cyclic_shift(alphabet), seed)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.sigma.alphabet()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn seed(&self) -> Symbol {
        self.seed
    }

    /// `ψ(w)`: each letter `x` becomes `x σ(x)`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.alphabet().check_same(w.alphabet())?;
        let mut out = Vec::with_capacity(2 * w.len());
        for &x in w.iter() {
            out.push(x);
            out.push(self.sigma.apply(x));
        }
        Ok(Word::from_trusted(w.alphabet(), out))
    }

    /// The first `length` letters of the fixed point.
    pub fn generate_prefix(&self, length: usize) -> Word {
        let mut out = Vec::with_capacity(length);
        if length > 0 {
            out.push(self.seed);
        }
        for n in 1..length {
            let parent = out[n / 2];
            out.push(if n % 2 == 0 { parent } else { self.sigma.apply(parent) });
        }
        Word::from_trusted(self.alphabet(), out)
    }

    /// Letter `n` of the fixed point in constant time.
    ///
    /// ```
    /// use twisted_words::{Alphabet, CyclicShiftMorphism, Symbol};
    /// let psi = CyclicShiftMorphism::canonical(Alphabet::new(3)?, Symbol(0))?;
    /// assert_eq!(psi.generate_prefix(8).render()?, "abbcbcca");
    /// assert_eq!(psi.letter_at(7), Symbol(0));
    /// # Ok::<(), twisted_words::Error>(())
    /// ```
    #[inline]
    pub fn letter_at(&self, n: u64) -> Symbol {
        let steps = n.count_ones() as usize;
        self.orbit[steps % self.orbit.len()]
    }

    /// Undoes `ψ` on an aligned factor.
    ///
    /// With `phase = 1` the first letter is taken to be the second half of
    /// a block and is dropped. A trailing unpaired letter is dropped too.
    /// Returns `None` if some aligned pair `(x, y)` has `y != σ(x)`.
    pub fn desubstitute(&self, w: &Word, phase: u8) -> Option<Word> {
        if w.alphabet() != self.alphabet() {
            return None;
        }
        let body = if phase % 2 == 1 { w.get(1..).unwrap_or(&[]) } else { &w[..] };
        let mut out = Vec::with_capacity(body.len() / 2);
        for pair in body.chunks_exact(2) {
            if pair[1] != self.sigma.apply(pair[0]) {
                return None;
            }
            out.push(pair[0]);
        }
        Some(Word::from_trusted(w.alphabet(), out))
    }

    /// Runs one step of the descent argument on an occurrence.
    ///
    /// The report only records what this instance looks like: the parity of
    /// the start, whether `m` is even, and, when both are even-aligned, the
    /// desubstituted blocks and whether they form a repetition themselves.
    pub fn descend_occurrence(
        &self,
        prefix: &Word,
        occ: Occurrence,
        delta: &Permutation,
    ) -> Result<DescentReport> {
        let end = occ.end();
        if occ.m == 0 || end > prefix.len() {
            return Err(Error::OccurrenceOutOfBounds {
                start: occ.start,
                m: occ.m,
                k: occ.k,
                len: prefix.len(),
            });
        }
        let factor = prefix.factor(occ.start..end);
        if is_strong_repetition(&factor, occ.k, delta)? != Some(occ.m) {
            return Err(Error::NotARepetition { start: occ.start, m: occ.m, k: occ.k });
        }

        let start_parity = (occ.start % 2) as u8;
        let m_even = occ.m.is_multiple_of(2);
        let mut report = DescentReport {
            occurrence: occ,
            start_parity,
            m_even,
            preimage_blocks: None,
            preimage_is_repetition: None,
        };
        if start_parity == 0 && m_even {
            let blocks: Option<Vec<Word>> = (0..occ.k)
                .map(|i| {
                    let from = occ.start + i * occ.m;
                    self.desubstitute(&prefix.factor(from..from + occ.m), 0)
                })
                .collect();
            if let Some(blocks) = blocks {
                let mut joined = Vec::with_capacity(occ.k * occ.m / 2);
                for b in &blocks {
                    joined.extend_from_slice(b.symbols());
                }
                let preimage = Word::from_trusted(prefix.alphabet(), joined);
                let is_rep = is_strong_repetition(&preimage, occ.k, delta)?.is_some();
                report.preimage_blocks = Some(blocks);
                report.preimage_is_repetition = Some(is_rep);
            }
        }
        Ok(report)
    }
}

/// Outcome of [`CyclicShiftMorphism::descend_occurrence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentReport {
    pub occurrence: Occurrence,
    /// `occurrence.start mod 2`.
    pub start_parity: u8,
    pub m_even: bool,
    /// `Y_0, ..., Y_{k-1}`, each of length `m / 2`; present only for an
    /// even start and even `m` whose blocks desubstitute cleanly.
    pub preimage_blocks: Option<Vec<Word>>,
    pub preimage_is_repetition: Option<bool>,
}

impl DescentReport {
    /// Whether this instance matches the synchronization pattern: even
    /// start, even block length, and a repetition again after desubstitution.
    pub fn conforms(&self) -> bool {
        self.preimage_is_repetition == Some(true)
    }
}

/// A plain serializable summary of a descent report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentSummary {
    pub start: usize,
    pub m: usize,
    pub k: usize,
    pub start_parity: u8,
    pub m_even: bool,
    pub preimage: Option<String>,
    pub preimage_is_repetition: Option<bool>,
}

impl From<&DescentReport> for DescentSummary {
    fn from(r: &DescentReport) -> Self {
        DescentSummary {
            start: r.occurrence.start,
            m: r.occurrence.m,
            k: r.occurrence.k,
            start_parity: r.start_parity,
            m_even: r.m_even,
            preimage: r.preimage_blocks.as_ref().map(|bs| {
                bs.iter().map(|b| format!("({b})")).collect::<Vec<_>>().join("")
            }),
            preimage_is_repetition: r.preimage_is_repetition,
        }
    }
}
