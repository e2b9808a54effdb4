mod common;

use braidfloer::braid::{parse_braid, BraidWord};
use braidfloer::free_group::{
    abelianization_matrix, artin_endo, artin_endo_unreduced, eliminate_last_generator,
    FreeGroupEndo,
};
use braidfloer::nielsen::{lefschetz_number, nielsen_bound, reidemeister_trace};
use common::{braid, braid_on, cases, transitive_braid};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn pair_on_same_strands() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=6).prop_flat_map(|d| (braid_on(d, 10), braid_on(d, 10)))
}

/// `1 - tr` of the permutation action on `Z^d / (1, …, 1)`.
fn permutation_lefschetz(b: &BraidWord) -> BigInt {
    let fixed = b.induced_permutation().fixed_points() as i64;
    BigInt::from(1 - (fixed - 1))
}

proptest! {
    #![proptest_config(cases(1000))]

    #[test]
    fn action_is_a_homomorphism((a, b) in pair_on_same_strands()) {
        let ab = artin_endo(&a.compose(&b).unwrap());
        prop_assert_eq!(ab, artin_endo(&a).compose(&artin_endo(&b)));
    }

    #[test]
    fn elimination_commutes_with_action(b in braid(2, 6, 12)) {
        prop_assert_eq!(eliminate_last_generator(&artin_endo_unreduced(&b)), artin_endo(&b));
    }

    #[test]
    fn inverse_braid_inverts_action(b in braid(2, 6, 12)) {
        let id = FreeGroupEndo::identity(b.strands() - 1);
        prop_assert_eq!(artin_endo(&b).compose(&artin_endo(&b.invert())), id);
    }

    #[test]
    fn homology_action_is_unimodular(b in braid(2, 7, 12)) {
        let a = abelianization_matrix(&artin_endo(&b));
        prop_assert!(a.determinant().abs().is_one());
        let fixed = b.induced_permutation().fixed_points() as i64;
        prop_assert_eq!(a.trace(), BigInt::from(fixed - 1));
    }

    #[test]
    fn transitive_trace_is_minus_one(b in transitive_braid(2, 7, 10)) {
        let a = abelianization_matrix(&artin_endo(&b));
        prop_assert_eq!(a.trace(), BigInt::from(-1));
        prop_assert!(a.determinant().abs().is_one());
    }

    #[test]
    fn augmentation_equals_lefschetz(b in braid(2, 6, 12)) {
        let endo = artin_endo(&b);
        let nd = reidemeister_trace(&endo);
        prop_assert_eq!(nd.augmentation(), lefschetz_number(&endo));
        prop_assert_eq!(nd.lefschetz().clone(), permutation_lefschetz(&b));
    }

    #[test]
    fn transitive_lefschetz_is_two(b in transitive_braid(2, 6, 10)) {
        let nd = reidemeister_trace(&artin_endo(&b));
        prop_assert_eq!(nd.augmentation(), BigInt::from(2));
        prop_assert_eq!(nd.lefschetz().clone(), BigInt::from(2));
    }

    #[test]
    fn bound_dominates_and_has_parity(b in braid(2, 6, 12)) {
        let nd = reidemeister_trace(&artin_endo(&b));
        let (bound, l) = (nd.bound(), nd.lefschetz().clone());
        prop_assert!(bound >= l.abs());
        prop_assert!((&bound - &l).is_even());
    }

    #[test]
    fn conjugation_invariance((b, g) in pair_on_same_strands()) {
        let conj = g.compose(&b).unwrap().compose(&g.invert()).unwrap();
        let (e, f) = (artin_endo(&b), artin_endo(&conj));
        prop_assert_eq!(lefschetz_number(&e), lefschetz_number(&f));
        prop_assert_eq!(nielsen_bound(&e), nielsen_bound(&f));
        let (x, y) = (reidemeister_trace(&e), reidemeister_trace(&f));
        prop_assert_eq!(x.class_space().invariant_factors(), y.class_space().invariant_factors());
        prop_assert_eq!(x.order_index_multiset(), y.order_index_multiset());
    }

    #[test]
    fn inversion_symmetry(b in braid(2, 6, 12)) {
        let (e, f) = (artin_endo(&b), artin_endo(&b.invert()));
        prop_assert_eq!(lefschetz_number(&e), lefschetz_number(&f));
        prop_assert_eq!(nielsen_bound(&e), nielsen_bound(&f));
    }

    #[test]
    fn framing_twists_are_invisible(b in braid(2, 6, 12)) {
        let untwisted = BraidWord::new(
            b.strands(),
            b.letters()
                .iter()
                .copied()
                .filter(|l| matches!(l, braidfloer::braid::BraidLetter::Artin { .. }))
                .collect(),
        )
        .unwrap();
        prop_assert_eq!(artin_endo(&b), artin_endo(&untwisted));
    }
}

#[test]
fn identity_endomorphisms() {
    for n in 1..=7usize {
        let nd = reidemeister_trace(&FreeGroupEndo::identity(n));
        let expected = BigInt::from(1 - n as i64);
        assert_eq!(nd.lefschetz(), &expected);
        assert_eq!(nd.indices().len(), usize::from(n > 1));
        assert_eq!(nd.index_of(&vec![BigInt::from(0); n]), expected);
    }
}

#[test]
fn calibration_braids() {
    for (text, order) in [("d=2; s1", 2), ("d=3; s1 s2", 3)] {
        let nd = reidemeister_trace(&artin_endo(&parse_braid(text).unwrap()));
        assert_eq!(nd.class_space().order(), Some(BigInt::from(order)));
        let indices: Vec<BigInt> = nd.indices().values().cloned().collect();
        assert_eq!(indices, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(nd.bound(), BigInt::from(2));
    }
}
