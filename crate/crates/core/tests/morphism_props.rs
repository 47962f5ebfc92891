mod common;

use common::{alpha, arb_perm, arb_word};
use proptest::prelude::*;
use twisted_words::{CyclicShiftMorphism, Permutation, Symbol};

fn arb_morphism() -> impl Strategy<Value = CyclicShiftMorphism> {
    (2usize..7).prop_flat_map(|n| {
        (arb_perm(n), 0..n as u32)
            .prop_map(|(sigma, seed)| CyclicShiftMorphism::new(sigma, Symbol(seed)).unwrap())
    })
}

proptest! {
    #[test]
    fn morphism_is_a_morphism(
        (psi, u, v) in arb_morphism().prop_flat_map(|psi| {
            let n = psi.alphabet().size();
            (Just(psi), arb_word(n, 20), arb_word(n, 20))
        })
    ) {
        let uv = u.concat(&v).unwrap();
        let image = psi.apply(&uv).unwrap();
        prop_assert_eq!(image.len(), 2 * uv.len());
        prop_assert_eq!(image, psi.apply(&u).unwrap().concat(&psi.apply(&v).unwrap()).unwrap());
    }

    #[test]
    fn desubstitute_inverts_apply(
        (psi, v) in arb_morphism().prop_flat_map(|psi| {
            let n = psi.alphabet().size();
            (Just(psi), arb_word(n, 40))
        })
    ) {
        let image = psi.apply(&v).unwrap();
        prop_assert_eq!(psi.desubstitute(&image, 0), Some(v));
    }

    #[test]
    fn prefixes_are_coherent(psi in arb_morphism(), a in 0usize..=1 << 16, b in 0usize..=1 << 16) {
        let (short, long) = (a.min(b), a.max(b));
        let long_prefix = psi.generate_prefix(long);
        prop_assert_eq!(psi.generate_prefix(short), long_prefix.prefix(short));
    }

    #[test]
    fn prefix_is_a_fixed_point(psi in arb_morphism(), len in 1usize..2000) {
        let prefix = psi.generate_prefix(len);
        prop_assert_eq!(psi.apply(&prefix).unwrap(), psi.generate_prefix(2 * len));
    }
}

#[test]
fn letter_at_matches_generation_below_2_16() {
    for n in 2..=6 {
        for seed in 0..n as u32 {
            let psi = CyclicShiftMorphism::canonical(alpha(n), Symbol(seed)).unwrap();
            let prefix = psi.generate_prefix(1 << 16);
            assert!(prefix.iter().enumerate().all(|(i, &s)| psi.letter_at(i as u64) == s));
        }
    }
}

#[test]
fn thue_morse_parity_law() {
    let psi = CyclicShiftMorphism::new(
        Permutation::from_cycles(alpha(2), "(0 1)").unwrap(),
        Symbol(0),
    )
    .unwrap();
    for n in 0..1u64 << 16 {
        assert_eq!(psi.letter_at(n) == Symbol(0), n.count_ones() % 2 == 0, "n = {n}");
    }
}

#[test]
fn letter_at_far_out() {
    let psi = CyclicShiftMorphism::canonical(alpha(3), Symbol(0)).unwrap();
    // 2^40 - 1 has 40 ones; σ^40 = σ on three letters
    assert_eq!(psi.letter_at((1 << 40) - 1), Symbol(1));
    assert_eq!(psi.letter_at(1 << 40), Symbol(1));
}
