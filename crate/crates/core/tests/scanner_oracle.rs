//! The fast scanner against the direct one, plus the algebraic laws of
//! twisted repetitions checked by brute force.

mod common;

use common::{alpha, arb_perm, arb_word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twisted_words::{
    is_strong_repetition, scan_fast, scan_naive, verify_freeness, CyclicShiftMorphism,
    Occurrence, Permutation, RepetitionQuery, Symbol, Word,
};

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Word {
    let v: Vec<u32> = (0..len).map(|_| rng.gen_range(0..n as u32)).collect();
    Word::from_values(alpha(n), &v).unwrap()
}

#[test]
fn fast_equals_naive_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=200);
        let w = random_word(&mut rng, n, len);
        let j = rng.gen_range(0..n as u64);
        let k = rng.gen_range(2..=3);
        let delta = Permutation::cyclic_shift(alpha(n)).power(j);
        let q = RepetitionQuery::new(k, delta, 1, 200).unwrap();
        assert_eq!(scan_fast(&w, &q).unwrap(), scan_naive(&w, &q).unwrap(), "{w} k={k} j={j}");
    }
}

#[test]
fn fast_equals_naive_on_low_entropy_words() {
    // Binary-ish words over a larger alphabet produce many repetitions.
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=120);
        let v: Vec<u32> = (0..len).map(|_| rng.gen_range(0..2u32.min(n as u32))).collect();
        let w = Word::from_values(alpha(n), &v).unwrap();
        let q = RepetitionQuery::new(rng.gen_range(2..=4), Permutation::identity(alpha(n)), 1, 60)
            .unwrap();
        assert_eq!(scan_fast(&w, &q).unwrap(), scan_naive(&w, &q).unwrap());
    }
}

#[test]
fn fast_equals_naive_on_fixed_point_prefixes() {
    for n in [3, 4] {
        let psi = CyclicShiftMorphism::canonical(alpha(n), Symbol(0)).unwrap();
        let prefix = psi.generate_prefix(4096);
        for j in 1..n as u64 {
            let q = RepetitionQuery::new(3, psi.sigma().power(j), 1, 128).unwrap();
            assert_eq!(scan_fast(&prefix, &q).unwrap(), scan_naive(&prefix, &q).unwrap());
        }
    }
}

#[test]
fn excluded_case_cube_found_by_both() {
    let w = Word::parse("babbccab", alpha(3)).unwrap();
    let q = RepetitionQuery::new(3, Permutation::cyclic_shift(alpha(3)), 1, 2).unwrap();
    let expected = Occurrence { start: 1, m: 2, k: 3 };
    assert!(scan_naive(&w, &q).unwrap().contains(&expected));
    assert!(scan_fast(&w, &q).unwrap().contains(&expected));
}

#[test]
fn m_min_is_respected() {
    let psi = CyclicShiftMorphism::canonical(alpha(3), Symbol(0)).unwrap();
    let prefix = psi.generate_prefix(2048);
    let q = RepetitionQuery::new(3, psi.sigma().clone(), 2, 64).unwrap();
    let fast = scan_fast(&prefix, &q).unwrap();
    assert!(fast.iter().all(|o| o.m >= 2));
    assert_eq!(fast, scan_naive(&prefix, &q).unwrap());
}

/// Textbook detector for classical k-powers: a factor of length k·m is a
/// k-power iff it has period m.
fn classical_powers(w: &Word, k: usize, m_max: usize) -> Vec<Occurrence> {
    let mut out = Vec::new();
    for start in 0..w.len() {
        for m in 1..=m_max {
            let end = start + k * m;
            if end > w.len() {
                break;
            }
            if (start..end - m).all(|i| w[i] == w[i + m]) {
                out.push(Occurrence { start, m, k });
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn identity_twist_gives_classical_powers(
        w in (2usize..4).prop_flat_map(|n| arb_word(n, 80)),
        k in 2usize..5,
    ) {
        let q = RepetitionQuery::new(k, Permutation::identity(w.alphabet()), 1, 40).unwrap();
        prop_assert_eq!(scan_fast(&w, &q).unwrap(), classical_powers(&w, k, 40));
    }

    #[test]
    fn fast_equals_naive(
        (w, delta) in (2usize..6).prop_flat_map(|n| (arb_word(n, 150), arb_perm(n))),
        k in 2usize..5,
    ) {
        let q = RepetitionQuery::new(k, delta, 1, 150).unwrap();
        prop_assert_eq!(scan_fast(&w, &q).unwrap(), scan_naive(&w, &q).unwrap());
    }

    #[test]
    fn every_reported_occurrence_reverifies(
        (w, delta) in (2usize..5).prop_flat_map(|n| (arb_word(n, 120), arb_perm(n))),
    ) {
        let q = RepetitionQuery::new(2, delta.clone(), 1, 60).unwrap();
        let report = verify_freeness(&w, &q).unwrap();
        prop_assert_eq!(report.self_check_failures, 0);
        for o in &report.occurrences {
            let factor = w.factor(o.start..o.end());
            prop_assert_eq!(is_strong_repetition(&factor, o.k, &delta).unwrap(), Some(o.m));
        }
    }

    #[test]
    fn single_letter_blocks(
        (w, delta) in (2usize..6).prop_flat_map(|n| (arb_word(n, 60), arb_perm(n))),
    ) {
        let q = RepetitionQuery::new(3, delta.clone(), 1, 1).unwrap();
        let found = scan_fast(&w, &q).unwrap();
        for s in 0..w.len().saturating_sub(2) {
            let x = w[s];
            let shape = w[s + 1] == delta.apply(x) && w[s + 2] == delta.apply(delta.apply(x));
            prop_assert_eq!(found.contains(&Occurrence { start: s, m: 1, k: 3 }), shape);
        }
    }
}

/// Every word of length `len` over `n` letters, by counting in base `n`.
fn all_words(n: usize, len: usize) -> impl Iterator<Item = Word> {
    (0..(n as u64).pow(len as u32)).map(move |mut code| {
        let v: Vec<u32> = (0..len)
            .map(|_| {
                let d = (code % n as u64) as u32;
                code /= n as u64;
                d
            })
            .collect();
        Word::from_values(alpha(n), &v).unwrap()
    })
}

fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<u32>, n: u32, out: &mut Vec<Permutation>) {
        if prefix.len() == n as usize {
            out.push(Permutation::from_image(prefix.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n as u32, &mut out);
    out
}

#[test]
fn conjugation_law_by_brute_force() {
    // U is a (k, δ)-repetition iff π(U) is a (k, πδπ⁻¹)-repetition.
    let perms = all_perms(3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for len in [3, 6, 9, 12] {
        for u in all_words(3, len).filter(|_| len <= 9 || rng.gen_bool(0.05)) {
            for delta in &perms {
                for pi in &perms {
                    let conj = pi.compose(delta).unwrap().compose(&pi.inverse()).unwrap();
                    let lhs = is_strong_repetition(&u, 3, delta).unwrap();
                    let rhs = is_strong_repetition(&u.twist(pi).unwrap(), 3, &conj).unwrap();
                    assert_eq!(lhs, rhs, "{u} δ={delta} π={pi}");
                }
            }
        }
    }
}
