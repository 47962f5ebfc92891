//! Twisted repetitions in fixed points of cyclic shift morphisms.
//!
//! The crate builds the infinite words generated by `ψ(a) = a σ(a)` for a
//! permutation `σ` of a finite alphabet, finds strongly `(k, δ)`-repetitions
//! (factors `X₀ X₁ … X_{k-1}` with `X_i = δⁱ(X₀)` letterwise), and measures
//! factor complexity of long prefixes.
//!
//! ```
//! use twisted_words::{Alphabet, CyclicShiftMorphism, RepetitionQuery, Symbol, verify_freeness};
//!
//! let abc = Alphabet::new(3)?;
//! let psi = CyclicShiftMorphism::canonical(abc, Symbol(0))?;
//! let prefix = psi.generate_prefix(1 << 12);
//!
//! // δ = σ²: no cube-like twisted repetition with blocks up to 128
//! let query = RepetitionQuery::new(3, psi.sigma().power(2), 1, 128)?;
//! assert!(verify_freeness(&prefix, &query)?.is_free());
//!
//! // δ = σ: "cab" at position 6 is c σ(c) σ²(c)
//! let query = RepetitionQuery::new(3, psi.sigma().clone(), 1, 128)?;
//! let report = verify_freeness(&prefix, &query)?;
//! assert_eq!(report.occurrences[0].start, 6);
//! # Ok::<(), twisted_words::Error>(())
//! ```
//!
//! The `book/` directory next to the workspace explains the concepts at
//! length; its code listings are compiled and run as doctests of this
//! crate.

pub mod avoidance;
pub mod complexity;
mod error;
pub mod morphism;
pub mod perm;
pub mod word;

pub use avoidance::{
    audit_length3_structure, is_strong_repetition, scan_fast, scan_naive, theorem_campaign,
    verify_freeness, CampaignParams, CampaignReport, CellStatus, FreenessReport, JPolicy,
    Occurrence, RepetitionQuery, ScanAlgorithm, StructureAuditReport,
};
pub use complexity::{
    complexity_profile, entropy_estimate, factor_count_naive, fit_linear, ComplexityProfile,
    LinearFit,
};
pub use error::{Error, Result};
pub use morphism::{CyclicShiftMorphism, DescentReport};
pub use perm::Permutation;
pub use word::{twist, Alphabet, Symbol, Word};

// Chapters of the guide, compiled so their listings run under `cargo test`.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    pub mod words {}
    #[doc = include_str!("../../../book/src/morphism.md")]
    pub mod morphism {}
    #[doc = include_str!("../../../book/src/repetitions.md")]
    pub mod repetitions {}
    #[doc = include_str!("../../../book/src/theorem_audit.md")]
    pub mod theorem_audit {}
    #[doc = include_str!("../../../book/src/complexity.md")]
    pub mod complexity {}
}
