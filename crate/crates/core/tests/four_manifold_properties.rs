mod common;

use braidfloer::four_manifold::{
    anticanonical_tori_count, assemble_pi1, characteristic_numbers, check_abelianization,
    tietze_simplify, PresentedGroup, SumConfiguration, DEFAULT_EFFORT,
};
use common::{cases, free_word, transitive_braid};
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

fn presentation() -> impl Strategy<Value = PresentedGroup> {
    (1usize..=4).prop_flat_map(|rank| {
        vec(free_word(rank, 8), 0..=4).prop_map(move |relators| {
            let names = (1..=rank).map(|k| format!("g{k}")).collect();
            PresentedGroup::new(names, relators)
        })
    })
}

proptest! {
    #![proptest_config(cases(1000))]

    #[test]
    fn tietze_preserves_abelianization(g in presentation()) {
        let out = tietze_simplify(&g, DEFAULT_EFFORT);
        let (before, after) = (g.abelianization(), out.group.abelianization());
        prop_assert_eq!(before.cokernel().free_rank(), after.cokernel().free_rank());
        prop_assert_eq!(before.cokernel().torsion(), after.cokernel().torsion());
        prop_assert!(out.group.total_length() <= 4 * g.total_length() + 256);
    }

    #[test]
    fn assembled_group_abelianizes_correctly(b in transitive_braid(2, 6, 8)) {
        let d = b.strands();
        let g = assemble_pi1(&b).unwrap();
        let check = check_abelianization(&g, d);
        prop_assert!(check.matches_target, "{}", g);
        prop_assert_eq!(check.structure.free_rank, 1);
        prop_assert_eq!(check.structure.torsion, vec![BigInt::from(d)]);
        let simplified = tietze_simplify(&g, DEFAULT_EFFORT).group;
        prop_assert!(check_abelianization(&simplified, d).matches_target);
    }

    #[test]
    fn characteristic_numbers_ignore_the_braid(b in transitive_braid(2, 6, 8)) {
        let d = b.strands();
        let n = characteristic_numbers(&SumConfiguration::standard(), d).unwrap();
        prop_assert_eq!((n.c2, n.c1_squared), (48, 0));
        let t = anticanonical_tori_count(d).unwrap();
        prop_assert_eq!(t.total, 6 * d as u64 - 2);
        prop_assert_eq!(t.h1_copies + t.h3_copies + t.h4_copies, t.total);
    }
}
