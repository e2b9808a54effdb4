#![allow(dead_code)]

use braidfloer::braid::{BraidLetter, BraidWord, Permutation};
use braidfloer::free_group::{FreeWord, Letter};
use braidfloer::matrix::IntMatrix;
use proptest::collection::vec;
use proptest::prelude::*;

pub fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        ..ProptestConfig::default()
    }
}

pub fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(move |letters| {
        let letters: Vec<Letter> = letters
            .into_iter()
            .map(|(g, inverse)| Letter::new(g, inverse))
            .collect();
        FreeWord::from_letters(rank, letters).unwrap()
    })
}

pub fn braid_letter(strands: usize) -> impl Strategy<Value = BraidLetter> {
    prop_oneof![
        6 => (1..strands, any::<bool>()).prop_map(|(index, inverse)| BraidLetter::Artin { index, inverse }),
        1 => (1..=strands, any::<bool>()).prop_map(|(index, inverse)| BraidLetter::FrameTwist { index, inverse }),
    ]
}

pub fn braid_on(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    vec(braid_letter(strands), 0..=max_len)
        .prop_map(move |letters| BraidWord::new(strands, letters).unwrap())
}

pub fn braid(min_d: usize, max_d: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (min_d..=max_d).prop_flat_map(move |d| braid_on(d, max_len))
}

/// Appends a lift of the missing permutation, with random signs, so the
/// result induces `(1 2 … d)`.
pub fn complete_to_transitive(prefix: &BraidWord, signs: &[bool]) -> BraidWord {
    let d = prefix.strands();
    let target = prefix
        .induced_permutation()
        .inverse()
        .compose(&Permutation::standard_cycle(d));
    let lift = BraidWord::positive_lift(&target).unwrap();
    let letters: Vec<BraidLetter> = lift
        .letters()
        .iter()
        .zip(signs.iter().cycle())
        .map(|(&l, &flip)| if flip { l.inverse() } else { l })
        .collect();
    let out = prefix
        .compose(&BraidWord::new(d, letters).unwrap())
        .unwrap();
    assert!(out.is_transitive(), "{out}");
    out
}

pub fn transitive_braid(
    min_d: usize,
    max_d: usize,
    max_prefix: usize,
) -> impl Strategy<Value = BraidWord> {
    (braid(min_d, max_d, max_prefix), vec(any::<bool>(), 1..8))
        .prop_map(|(prefix, signs)| complete_to_transitive(&prefix, &signs))
}

pub fn int_matrix(
    max_rows: usize,
    max_cols: usize,
    bound: i64,
) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| vec(vec(-bound..=bound, c), r))
        .prop_map(|rows| IntMatrix::from_rows(&rows))
}
