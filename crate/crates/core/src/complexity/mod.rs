//! Factor complexity of finite prefixes.
//!
//! `p(k)` counts the distinct factors of length `k`. A finite prefix can
//! only undercount the infinite word, so every profile carries a stable
//! horizon: the largest `k` up to which the counts already agree with those
//! of the half-length prefix. Fits refuse to look past it.

mod automaton;

pub use automaton::SuffixAutomaton;

use std::collections::HashSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// Distinct-factor counts for lengths `1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    /// `counts[k]` for `k` in `1..=k_max`; `counts[0]` is unused.
    counts: Vec<u64>,
    pub alphabet_size: usize,
    pub word_length: usize,
    pub stable_upto: usize,
}

impl ComplexityProfile {
    /// Wraps externally supplied counts, `counts_from_1[i] = p(i + 1)`.
    pub fn from_counts(
        counts_from_1: &[u64],
        alphabet_size: usize,
        word_length: usize,
        stable_upto: usize,
    ) -> Self {
        let mut counts = Vec::with_capacity(counts_from_1.len() + 1);
        counts.push(0);
        counts.extend_from_slice(counts_from_1);
        ComplexityProfile {
            counts,
            alphabet_size,
            word_length,
            stable_upto: stable_upto.min(counts_from_1.len()),
        }
    }

    pub fn k_max(&self) -> usize {
        self.counts.len() - 1
    }

    /// `p(k)`. Panics if `k` is 0 or past `k_max`.
    pub fn count(&self, k: usize) -> u64 {
        assert!(k >= 1 && k <= self.k_max(), "length {k} outside 1..={}", self.k_max());
        self.counts[k]
    }

    /// `p(1), ..., p(k_max)`.
    pub fn counts(&self) -> &[u64] {
        &self.counts[1..]
    }

    pub fn is_stable(&self, k: usize) -> bool {
        k <= self.stable_upto
    }

    /// Checks the elementary bounds every factor count obeys:
    /// `p(k) <= min(N^k, L - k + 1)`, `p(k + 1) <= N·p(k)` and `p(1) <= N`.
    pub fn satisfies_bounds(&self) -> bool {
        let n = self.alphabet_size as u64;
        (1..=self.k_max()).all(|k| {
            let pk = self.counts[k];
            let power_bound = n.checked_pow(k as u32).unwrap_or(u64::MAX);
            let room = (self.word_length + 1).saturating_sub(k) as u64;
            let growth = k == self.k_max() || self.counts[k + 1] <= n.saturating_mul(pk);
            pk <= power_bound && pk <= room && growth
        })
    }
}

/// Number of distinct length-`k` factors of `w`, by enumeration into a set.
pub fn factor_count_naive(w: &Word, k: usize) -> Result<usize> {
    if k == 0 || k > w.len() {
        return Err(Error::FactorLength { k, len: w.len() });
    }
    Ok(w.windows(k).collect::<HashSet<_>>().len())
}

/// Factor counts for `k = 1..=k_max` via a suffix automaton, with the
/// stable horizon measured against the half-length prefix.
///
/// ```
/// use twisted_words::{complexity_profile, Alphabet, CyclicShiftMorphism, Symbol};
/// let thue_morse = CyclicShiftMorphism::canonical(Alphabet::new(2)?, Symbol(0))?;
/// let profile = complexity_profile(&thue_morse.generate_prefix(1 << 12), 5)?;
/// assert_eq!(profile.counts(), &[2, 4, 6, 10, 12]);
/// # Ok::<(), twisted_words::Error>(())
/// ```
pub fn complexity_profile(w: &Word, k_max: usize) -> Result<ComplexityProfile> {
    if k_max == 0 || k_max > w.len() {
        return Err(Error::FactorLength { k: k_max, len: w.len() });
    }
    let counts = counts_upto(&w[..], k_max);
    let half = counts_upto(&w[..w.len() / 2], k_max);
    let stable_upto = (1..=k_max).take_while(|&k| counts[k] == half[k]).count();
    Ok(ComplexityProfile {
        counts,
        alphabet_size: w.alphabet().size(),
        word_length: w.len(),
        stable_upto,
    })
}

fn counts_upto(symbols: &[crate::word::Symbol], k_max: usize) -> Vec<u64> {
    SuffixAutomaton::new(symbols.iter().map(|s| s.0)).counts_by_length(k_max)
}

/// Median-based linear fit `p(k) ≈ slope·k + intercept` over a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFit {
    pub slope: Ratio<i64>,
    pub intercept: Ratio<i64>,
    pub window: (usize, usize),
    pub max_residual: Ratio<i64>,
}

impl LinearFit {
    pub fn is_exact(&self) -> bool {
        self.max_residual == Ratio::from_integer(0)
    }

    /// Slope `N - 1` with zero residual: the conjectured linear law holds
    /// exactly over the window.
    pub fn matches_conjectured_slope(&self, alphabet_size: usize) -> bool {
        self.is_exact() && self.slope == Ratio::from_integer(alphabet_size as i64 - 1)
    }
}

fn median(mut values: Vec<Ratio<i64>>) -> Ratio<i64> {
    values.sort();
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2
    }
}

/// Fits a line to `p(k)` for `k` in `[k_lo, k_hi]`.
///
/// The slope is the median first difference and the intercept the median of
/// `p(k) - slope·k`. The window must contain at least two points and lie
/// inside the stable horizon.
pub fn fit_linear(profile: &ComplexityProfile, k_lo: usize, k_hi: usize) -> Result<LinearFit> {
    if k_lo == 0 || k_lo >= k_hi || k_hi > profile.stable_upto {
        return Err(Error::FitWindow { lo: k_lo, hi: k_hi, stable_upto: profile.stable_upto });
    }
    let p = |k: usize| Ratio::from_integer(profile.count(k) as i64);
    let slope = median((k_lo..k_hi).map(|k| p(k + 1) - p(k)).collect());
    let at = |k: usize| slope * Ratio::from_integer(k as i64);
    let intercept = median((k_lo..=k_hi).map(|k| p(k) - at(k)).collect());
    let max_residual = (k_lo..=k_hi)
        .map(|k| {
            let r = p(k) - (at(k) + intercept);
            if r < Ratio::from_integer(0) { -r } else { r }
        })
        .max()
        .expect("window is non-empty");
    Ok(LinearFit { slope, intercept, window: (k_lo, k_hi), max_residual })
}

/// `ln p(h) / h` at the stable horizon `h`.
pub fn entropy_estimate(profile: &ComplexityProfile) -> Result<f64> {
    let h = profile.stable_upto;
    if h < 2 {
        return Err(Error::ShortHorizon(h));
    }
    Ok((profile.count(h) as f64).ln() / h as f64)
}
