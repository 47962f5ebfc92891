//! Sweeps over `(N, j)` checking cube-like twisted repetitions in fixed
//! points of the canonical cyclic shift morphism.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verify_freeness, Occurrence, RepetitionQuery};
use crate::error::{Error, Result};
use crate::morphism::CyclicShiftMorphism;
use crate::word::Alphabet;

/// Block count used by every campaign cell.
pub const CAMPAIGN_K: usize = 3;

/// Which exponents `j` to sweep for each alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JPolicy {
    /// `N >= 3` and `j ≢ 1 (mod N)` only: the cases the avoidance theorem covers.
    TheoremOnly,
    /// Every `j` in `1..N`, including `j = 1` and `N = 2`.
    AllJ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    #[serde(rename = "N_values")]
    pub n_values: Vec<usize>,
    pub j_policy: JPolicy,
    pub prefix_length: usize,
    pub m_max: usize,
    pub k: usize,
    /// Seed letter `a₀` of every fixed point.
    pub seed: u32,
}

impl CampaignParams {
    pub fn new(n_values: Vec<usize>, j_policy: JPolicy, prefix_length: usize, m_max: usize) -> Self {
        CampaignParams { n_values, j_policy, prefix_length, m_max, k: CAMPAIGN_K, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u32) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::Campaign("no alphabet sizes given".into()));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n < 2) {
            return Err(Error::Campaign(format!("alphabet size {n} is below 2")));
        }
        if self.m_max == 0 {
            return Err(Error::Campaign("m_max must be at least 1".into()));
        }
        if self.prefix_length < self.k * self.m_max {
            return Err(Error::Campaign(format!(
                "prefix length {} is shorter than k·m_max = {}",
                self.prefix_length,
                self.k * self.m_max
            )));
        }
        Ok(())
    }

    /// The `(N, j)` cells this campaign covers, in canonical order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut ns = self.n_values.clone();
        ns.sort_unstable();
        ns.dedup();
        ns.into_iter()
            .flat_map(|n| (1..n).map(move |j| (n, j)))
            .filter(|&(n, j)| match self.j_policy {
                JPolicy::AllJ => true,
                JPolicy::TheoremOnly => is_theorem_case(n, j),
            })
            .collect()
    }
}

/// `N >= 3` and `j ≢ 1 (mod N)`.
pub fn is_theorem_case(n: usize, j: usize) -> bool {
    n >= 3 && j % n != 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    /// Theorem case, no repetition found in range.
    FreeAsPredicted,
    /// Theorem case, yet a verified repetition was found.
    Counterexample,
    /// Outside the theorem's hypotheses; repetitions found.
    ExcludedRepetitionsFound,
    /// Outside the theorem's hypotheses; none found in range.
    ExcludedNoneFound,
    /// The cell could not be run.
    Failed,
}

impl CellStatus {
    pub fn label(self) -> &'static str {
        match self {
            CellStatus::FreeAsPredicted => "theorem case, free as predicted",
            CellStatus::Counterexample => "theorem case, COUNTEREXAMPLE",
            CellStatus::ExcludedRepetitionsFound => "excluded case, repetitions found",
            CellStatus::ExcludedNoneFound => "excluded case, none found",
            CellStatus::Failed => "cell failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignCell {
    #[serde(rename = "N")]
    pub n: usize,
    pub j: usize,
    pub seed: u32,
    pub status: CellStatus,
    /// Sorted by `(m, start)`.
    pub occurrences: Vec<Occurrence>,
    pub minimal_m: Option<usize>,
    /// Smallest start position among the occurrences.
    pub earliest: Option<Occurrence>,
    pub self_check_failures: usize,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub params: CampaignParams,
    pub cells: Vec<CampaignCell>,
}

impl CampaignReport {
    pub fn cell(&self, n: usize, j: usize) -> Option<&CampaignCell> {
        self.cells.iter().find(|c| c.n == n && c.j == j)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &CampaignCell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Counterexample)
    }

    pub fn self_check_failures(&self) -> usize {
        self.cells.iter().map(|c| c.self_check_failures).sum()
    }
}

/// Runs every cell, in parallel on the current rayon pool. Cells are
/// returned sorted by `(N, j)` whatever the schedule.
pub fn theorem_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    params.validate()?;
    let mut cells: Vec<CampaignCell> =
        params.cells().into_par_iter().map(|(n, j)| run_cell(params, n, j)).collect();
    cells.sort_by_key(|c| (c.n, c.j));
    Ok(CampaignReport { params: params.clone(), cells })
}

fn run_cell(params: &CampaignParams, n: usize, j: usize) -> CampaignCell {
    let mut cell = CampaignCell {
        n,
        j,
        seed: params.seed,
        status: CellStatus::Failed,
        occurrences: Vec::new(),
        minimal_m: None,
        earliest: None,
        self_check_failures: 0,
        error: None,
    };
    let outcome = (|| -> Result<_> {
        let alphabet = Alphabet::new(n)?;
        let psi = CyclicShiftMorphism::canonical(alphabet, alphabet.symbol(params.seed)?)?;
        let delta = psi.sigma().power(j as u64);
        let prefix = psi.generate_prefix(params.prefix_length);
        let q = RepetitionQuery::new(params.k, delta, 1, params.m_max)?;
        verify_freeness(&prefix, &q)
    })();
    match outcome {
        Ok(report) => {
            let found = !report.occurrences.is_empty();
            cell.status = match (is_theorem_case(n, j), found) {
                (true, false) => CellStatus::FreeAsPredicted,
                (true, true) => CellStatus::Counterexample,
                (false, true) => CellStatus::ExcludedRepetitionsFound,
                (false, false) => CellStatus::ExcludedNoneFound,
            };
            cell.minimal_m = report.minimal_m();
            cell.earliest = report.occurrences.iter().min_by_key(|o| (o.start, o.m)).copied();
            cell.self_check_failures = report.self_check_failures;
            cell.occurrences = report.occurrences;
        }
        Err(e) => cell.error = Some(e.to_string()),
    }
    cell
}
