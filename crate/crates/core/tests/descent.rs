//! Descent reports on repetitions found in the excluded case j = 1.

mod common;

use common::alpha;
use twisted_words::{verify_freeness, CyclicShiftMorphism, RepetitionQuery, Symbol};

#[test]
fn odd_start_occurrence_has_no_preimage() {
    let psi = CyclicShiftMorphism::canonical(alpha(3), Symbol(0)).unwrap();
    let prefix = psi.generate_prefix(1 << 10);
    let delta = psi.sigma().clone();
    let report = verify_freeness(&prefix, &RepetitionQuery::new(3, delta.clone(), 1, 64).unwrap())
        .unwrap();
    let odd = report.occurrences.iter().find(|o| o.start % 2 == 1).copied().unwrap();
    let descent = psi.descend_occurrence(&prefix, odd, &delta).unwrap();
    assert_eq!(descent.start_parity, 1);
    assert!(descent.preimage_blocks.is_none());
    assert!(descent.preimage_is_repetition.is_none());
}

#[test]
fn descent_reports_respect_their_invariants() {
    for n in [3, 4] {
        let psi = CyclicShiftMorphism::canonical(alpha(n), Symbol(0)).unwrap();
        let prefix = psi.generate_prefix(1 << 12);
        let delta = psi.sigma().clone();
        let q = RepetitionQuery::new(3, delta.clone(), 1, 64).unwrap();
        for &occ in &verify_freeness(&prefix, &q).unwrap().occurrences {
            let r = psi.descend_occurrence(&prefix, occ, &delta).unwrap();
            assert_eq!(r.m_even, occ.m % 2 == 0);
            if let Some(blocks) = &r.preimage_blocks {
                assert!(r.m_even && r.start_parity == 0);
                assert!(blocks.iter().all(|b| b.len() == occ.m / 2));
            }
            if r.preimage_is_repetition.is_some() {
                assert!(r.preimage_blocks.is_some());
            }
            // aligned factors of the fixed point always desubstitute
            if r.m_even && r.start_parity == 0 {
                assert!(r.preimage_blocks.is_some());
            }
        }
    }
}

#[test]
fn aligned_repetitions_descend_when_delta_commutes_with_sigma() {
    let psi = CyclicShiftMorphism::canonical(alpha(3), Symbol(0)).unwrap();
    let prefix = psi.generate_prefix(1 << 12);
    let delta = psi.sigma().clone();
    let q = RepetitionQuery::new(3, delta.clone(), 2, 64).unwrap();
    let mut aligned = 0;
    for &occ in &verify_freeness(&prefix, &q).unwrap().occurrences {
        let r = psi.descend_occurrence(&prefix, occ, &delta).unwrap();
        if r.preimage_blocks.is_some() {
            aligned += 1;
            assert_eq!(r.preimage_is_repetition, Some(true), "{occ:?}");
        }
    }
    assert!(aligned > 0);
}
