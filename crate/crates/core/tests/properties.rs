//! Randomized property tests for the structural invariants the engine
//! relies on: parser round-trips, Markov moves, the Jones skein relation,
//! mirror symmetry, and agreement with the Kauffman-bracket oracle.

use num_bigint::BigInt;
use proptest::prelude::*;

use taftknot::braid::{parse, BraidWord};
use taftknot::invariant::{
    evaluate_closure, jones_via_v1, kauffman_jones, Mode, DEFAULT_CROSSING_CAP,
    DEFAULT_DIM_CAP,
};
use taftknot::ribbon::RibbonData;
use taftknot::scalars::{LaurentRing, LaurentScalar};

fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let gen = (1..strands as i32).prop_flat_map(|j| prop_oneof![Just(j), Just(-j)]);
    prop::collection::vec(gen, 0..=max_len)
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |s| {
        letters(s, max_len).prop_map(move |ls| BraidWord::new(s, ls).unwrap())
    })
}

fn t_pow(half: i64) -> LaurentScalar {
    // Exponents are quarter powers, so t^(half/2) has exponent 2 * half.
    LaurentScalar::monomial(2 * half, BigInt::from(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(w in word(5, 12)) {
        let text = w.to_string();
        let back = parse(&text, None).unwrap();
        prop_assert_eq!(back.strands, w.strands);
        prop_assert_eq!(back.letters, w.letters);
    }

    #[test]
    fn free_reduction_preserves_closure(w in word(4, 8)) {
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let a = evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        let b = evaluate_closure(&rib, &w.free_reduce(), Mode::Balanced, DEFAULT_DIM_CAP)
            .unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn conjugation_invariance(w in word(4, 6), a in letters(4, 3)) {
        let a: Vec<i32> = a
            .into_iter()
            .filter(|&g| g.unsigned_abs() < w.strands as u32)
            .collect();
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let base = evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        let conj = w.conjugate(&a).unwrap();
        let val = evaluate_closure(&rib, &conj, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        prop_assert_eq!(base, val);
    }

    #[test]
    fn stabilization_invariance(w in word(4, 6), up in any::<bool>()) {
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let base = evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        let stab = w.stabilize(if up { 1 } else { -1 });
        let val = evaluate_closure(&rib, &stab, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        prop_assert_eq!(base, val);
    }

    /// t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0), where the three
    /// links differ at one crossing inserted into a random braid word.
    #[test]
    fn jones_skein_relation(w in word(3, 6), pos_seed in any::<u64>(), g in 1..=2i32) {
        let g = g.min(w.strands as i32 - 1);
        let pos = (pos_seed as usize) % (w.letters.len() + 1);
        let mut plus = w.letters.clone();
        plus.insert(pos, g);
        let mut minus = w.letters.clone();
        minus.insert(pos, -g);
        let v0 = jones_via_v1(&w, DEFAULT_DIM_CAP).unwrap();
        let vp = jones_via_v1(&BraidWord::new(w.strands, plus).unwrap(), DEFAULT_DIM_CAP)
            .unwrap();
        let vm = jones_via_v1(&BraidWord::new(w.strands, minus).unwrap(), DEFAULT_DIM_CAP)
            .unwrap();
        let lhs = t_pow(-2).mul(&vp).sub(&t_pow(2).mul(&vm));
        let rhs = t_pow(1).sub(&t_pow(-1)).mul(&v0);
        prop_assert_eq!(lhs, rhs);
    }

    /// Reversing every crossing mirrors the link, which substitutes
    /// t -> t^-1 in the Jones polynomial.
    #[test]
    fn jones_mirror_symmetry(w in word(3, 7)) {
        let mirrored: Vec<i32> = w.letters.iter().map(|&g| -g).collect();
        let mw = BraidWord::new(w.strands, mirrored).unwrap();
        let v = jones_via_v1(&w, DEFAULT_DIM_CAP).unwrap();
        let vm = jones_via_v1(&mw, DEFAULT_DIM_CAP).unwrap();
        prop_assert_eq!(v.mirror(), vm);
    }

    #[test]
    fn engine_matches_kauffman_oracle(w in word(3, 7)) {
        let engine = jones_via_v1(&w, DEFAULT_DIM_CAP).unwrap();
        let oracle = kauffman_jones(&w, DEFAULT_CROSSING_CAP).unwrap();
        prop_assert_eq!(engine, oracle);
    }
}
