//! Detection of strongly `(k, δ)`-repetitions.
//!
//! A word `U` is such a repetition when it splits into `k` blocks of a
//! common length `m >= 1` with block `i` equal to block `0` twisted by `δⁱ`.
//! With `δ = id` these are the classical `k`-powers.
//!
//! Two scanners are provided. [`scan_naive`] compares symbols directly and
//! serves as the reference; [`scan_fast`] answers each block comparison
//! with one longest-common-extension query. They must agree on every input.

mod audit;
mod campaign;
mod fast;
mod lce;

pub use audit::{audit_length3_structure, has_shift_shape, Length3Factor, StructureAuditReport};
pub use campaign::{
    is_theorem_case, theorem_campaign, CampaignCell, CampaignParams, CampaignReport, CellStatus,
    JPolicy, CAMPAIGN_K,
};
pub use fast::scan_fast;
pub use lce::LceIndex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

/// What to look for: `k` blocks, twist `δ`, block lengths `m_min..=m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionQuery {
    k: usize,
    delta: Permutation,
    m_min: usize,
    m_max: usize,
}

impl RepetitionQuery {
    pub fn new(k: usize, delta: Permutation, m_min: usize, m_max: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::BlockCount(k));
        }
        if m_min == 0 || m_min > m_max {
            return Err(Error::BlockLengthBounds { m_min, m_max });
        }
        Ok(RepetitionQuery { k, delta, m_min, m_max })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn delta(&self) -> &Permutation {
        &self.delta
    }

    pub fn m_min(&self) -> usize {
        self.m_min
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// Largest block length worth trying in a word of length `len`.
    pub(crate) fn m_limit(&self, len: usize) -> usize {
        self.m_max.min(len / self.k)
    }

    /// `δ⁰, δ¹, ..., δ^{k-1}`.
    pub(crate) fn delta_powers(&self) -> Vec<Permutation> {
        (0..self.k as u64).map(|i| self.delta.power(i)).collect()
    }
}

/// A located repetition: `k` blocks of length `m` starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub start: usize,
    pub m: usize,
    pub k: usize,
}

impl Occurrence {
    /// One past the last covered position.
    pub fn end(&self) -> usize {
        self.start + self.k * self.m
    }

    /// Re-checks this occurrence against its host word.
    pub fn verify(&self, host: &Word, delta: &Permutation) -> bool {
        self.m >= 1
            && self.end() <= host.len()
            && matches!(
                is_strong_repetition(&host.factor(self.start..self.end()), self.k, delta),
                Ok(Some(m)) if m == self.m
            )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanAlgorithm {
    Naive,
    Fast,
}

/// Every repetition found in a word, within the scanned block lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub query: RepetitionQuery,
    pub word_length: usize,
    /// Sorted by `(m, start)` so the shortest repetitions come first.
    pub occurrences: Vec<Occurrence>,
    pub scan_algorithm: ScanAlgorithm,
    /// Scanner hits that failed re-verification. Always zero unless a
    /// scanner is broken; reported rather than hidden.
    pub self_check_failures: usize,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        self.occurrences.is_empty()
    }

    pub fn minimal_m(&self) -> Option<usize> {
        self.occurrences.first().map(|o| o.m)
    }

    /// Largest block length actually examined.
    pub fn scanned_m_max(&self) -> usize {
        self.query.m_limit(self.word_length)
    }
}

/// Checks whether `u` is a strongly `(k, δ)`-repetition and returns its
/// block length.
///
/// ```
/// use twisted_words::{is_strong_repetition, Alphabet, Permutation, Word};
/// let abc = Alphabet::new(3)?;
/// let delta = Permutation::cyclic_shift(abc);
/// let u = Word::parse("abbcca", abc)?;
/// assert_eq!(is_strong_repetition(&u, 3, &delta)?, Some(2));
/// # Ok::<(), twisted_words::Error>(())
/// ```
pub fn is_strong_repetition(u: &Word, k: usize, delta: &Permutation) -> Result<Option<usize>> {
    if k < 2 {
        return Err(Error::BlockCount(k));
    }
    u.alphabet().check_same(delta.alphabet())?;
    if u.is_empty() || !u.len().is_multiple_of(k) {
        return Ok(None);
    }
    let m = u.len() / k;
    let mut twisted = delta.clone();
    for i in 1..k {
        let block = &u[i * m..(i + 1) * m];
        if !block.iter().zip(&u[..m]).all(|(&b, &x)| b == twisted.apply(x)) {
            return Ok(None);
        }
        if i + 1 < k {
            twisted = delta.compose(&twisted)?;
        }
    }
    Ok(Some(m))
}

/// Reference scanner: tries every `(start, m)` by direct comparison.
/// Output is sorted by `(start, m)`.
pub fn scan_naive(w: &Word, q: &RepetitionQuery) -> Result<Vec<Occurrence>> {
    w.alphabet().check_same(q.delta.alphabet())?;
    let powers = q.delta_powers();
    let k = q.k;
    let mut out = Vec::new();
    for start in 0..w.len() {
        let room = (w.len() - start) / k;
        for m in q.m_min..=q.m_max.min(room) {
            let x0 = &w[start..start + m];
            let hit = (1..k).all(|i| {
                let block = &w[start + i * m..start + (i + 1) * m];
                block.iter().zip(x0).all(|(&b, &x)| b == powers[i].apply(x))
            });
            if hit {
                out.push(Occurrence { start, m, k });
            }
        }
    }
    Ok(out)
}

/// Scans `w` with the fast scanner and re-verifies every hit.
///
/// An empty occurrence list means "free within the scanned range", never
/// more than that.
pub fn verify_freeness(w: &Word, q: &RepetitionQuery) -> Result<FreenessReport> {
    let hits = scan_fast(w, q)?;
    let total = hits.len();
    let mut occurrences: Vec<Occurrence> =
        hits.into_iter().filter(|o| o.verify(w, &q.delta)).collect();
    let self_check_failures = total - occurrences.len();
    occurrences.sort_by_key(|o| (o.m, o.start));
    Ok(FreenessReport {
        query: q.clone(),
        word_length: w.len(),
        occurrences,
        scan_algorithm: ScanAlgorithm::Fast,
        self_check_failures,
    })
}
