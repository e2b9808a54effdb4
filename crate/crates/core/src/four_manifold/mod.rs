//! Fundamental group and characteristic numbers of the surgered manifold `M^β`.
//!
//! `π₁(M₁ ∖ H₁)` is presented as `Z⟨l₁⟩ × (F_{d-1} ⋊ Z⟨l₂⟩)` with
//! `l₂ x_i l₂⁻¹ = φ(x_i)`. Gluing in `M₂′ ∖ H₁′`, whose group is `Z⟨d₁⟩`,
//! adds three relators:
//!
//! * `x1`: the meridian of `H₁` is the loop around one puncture, and
//!   transitivity makes all puncture loops conjugate to it;
//! * `l2^d`: the second longitude of `H₁` runs `d` times along the base
//!   circle, up to puncture loops that the meridian relator already kills;
//! * `l1 d1^-1`: the first longitudes are identified.
//!
//! The certified claim is the abelianization `Z ⊕ Z/d` with `[l₁] ↦ (1, 0)`
//! and `[l₂] ↦ (0, 1)`; recognizing `Z × Z/d` itself is heuristic.

mod pieces;
mod presentation;
mod tietze;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::{BraidWord, TransitivityMode};
use crate::error::BraidError;
use crate::free_group::{artin_endo, FreeGroupEndo, FreeWord, Letter};
use crate::nielsen::GroupStructure;

pub use pieces::{
    anticanonical_tori_count, characteristic_numbers, CharacteristicNumbers, GluingPiece,
    SumConfiguration, ToriCount, TorusSpec, Volume, VolumeSymbol,
};
pub use presentation::{Abelianization, PresentedGroup};
pub use tietze::{standard_product_order, tietze_simplify, TietzeOutcome, DEFAULT_EFFORT};

fn require_transitive(braid: &BraidWord, mode: TransitivityMode) -> Result<(), BraidError> {
    if braid.transitivity(mode).is_transitive() {
        Ok(())
    } else {
        Err(BraidError::NotTransitive(braid.to_string()))
    }
}

/// Generators `l1, l2, x1, …, x_n` and relators `[l1, l2]`, `[l1, x_i]`,
/// `l2 x_i l2^-1 φ(x_i)^-1` for an arbitrary endomorphism `φ` of `F_n`.
pub fn mapping_torus_of_endo(endo: &FreeGroupEndo) -> PresentedGroup {
    let n = endo.rank();
    let rank = n + 2;
    let mut names = vec!["l1".to_string(), "l2".to_string()];
    names.extend((1..=n).map(|k| format!("x{k}")));
    let (l1, l2) = (Letter::new(1, false), Letter::new(2, false));
    let x = |k: usize| Letter::new(k + 2, false);
    let word = |letters: Vec<Letter>| FreeWord::from_letters(rank, letters).expect("in range");

    let mut relators = vec![word(vec![l1, l2, l1.inverse(), l2.inverse()])];
    for k in 1..=n {
        relators.push(word(vec![l1, x(k), l1.inverse(), x(k).inverse()]));
    }
    for k in 1..=n {
        let image_inv = endo.image(k).inverse();
        let shifted = image_inv
            .letters()
            .iter()
            .map(|l| Letter::new(l.generator() + 2, l.is_inverse()));
        let mut letters = vec![l2, x(k), l2.inverse()];
        letters.extend(shifted);
        relators.push(word(letters));
    }
    PresentedGroup::new(names, relators)
}

/// Presentation of `π₁(M₁ ∖ H₁)` for a transitive braid.
pub fn mapping_torus_presentation(braid: &BraidWord) -> Result<PresentedGroup, BraidError> {
    mapping_torus_presentation_with(braid, TransitivityMode::Strict)
}

pub fn mapping_torus_presentation_with(
    braid: &BraidWord,
    mode: TransitivityMode,
) -> Result<PresentedGroup, BraidError> {
    require_transitive(braid, mode)?;
    Ok(mapping_torus_of_endo(&artin_endo(braid)))
}

/// Van Kampen presentation of `π₁(M^β)`.
pub fn assemble_pi1(braid: &BraidWord) -> Result<PresentedGroup, BraidError> {
    assemble_pi1_with(braid, TransitivityMode::Strict)
}

pub fn assemble_pi1_with(
    braid: &BraidWord,
    mode: TransitivityMode,
) -> Result<PresentedGroup, BraidError> {
    let torus = mapping_torus_presentation_with(braid, mode)?;
    let d = braid.strands();
    let mut names = torus.generators().to_vec();
    names.push("d1".to_string());
    let rank = names.len();
    let mut relators: Vec<FreeWord> = torus.relators().iter().map(|r| r.widen(rank)).collect();
    let l1 = Letter::new(1, false);
    let l2 = Letter::new(2, false);
    let x1 = Letter::new(3, false);
    let d1 = Letter::new(rank, false);
    relators.push(FreeWord::from_letters(rank, [x1]).expect("in range"));
    relators.push(FreeWord::from_letters(rank, vec![l2; d]).expect("in range"));
    relators.push(FreeWord::from_letters(rank, [l1, d1.inverse()]).expect("in range"));
    Ok(PresentedGroup::new(names, relators))
}

/// First homology of an assembled `π₁(M^β)` checked against `Z ⊕ Z/d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Abelianization {
    pub structure: GroupStructure,
    /// `[l₁]`, `[l₂]` generate, `d·[l₂] = 0`, and the group is `Z ⊕ Z/d`;
    /// together these give an isomorphism to `Z ⊕ Z/d` sending
    /// `[l₁] ↦ (1, 0)`, `[l₂] ↦ (0, 1)`.
    pub matches_target: bool,
}

pub fn check_abelianization(group: &PresentedGroup, strands: usize) -> Pi1Abelianization {
    let ab = group.abelianization();
    let cokernel = ab.cokernel();
    let d = BigInt::from(strands);
    let shape = cokernel.free_rank() == 1 && cokernel.torsion() == vec![d.clone()] && !d.is_one();
    let matches_target = shape
        && match (group.generator_index("l1"), group.generator_index("l2")) {
            (Some(_), Some(l2)) => {
                let d_l2 = ab.class_of(&[(l2, strands as i64)]);
                let quotient = group.with_killed(&["l1", "l2"]).abelianization();
                d_l2.iter().all(Zero::is_zero) && quotient.cokernel().is_trivial()
            }
            _ => false,
        };
    Pi1Abelianization {
        structure: cokernel.into(),
        matches_target,
    }
}
