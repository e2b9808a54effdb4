//! Lefschetz numbers, Reidemeister traces, and homological Nielsen classes
//! of free-group endomorphisms.
//!
//! `S′` deformation retracts to a wedge of `n = d - 1` circles, so a selfmap
//! is determined up to homotopy by its action `e` on the free group. The
//! Reidemeister trace is
//!
//! ```text
//! R(e) = [1] - Σ_j [∂e(x_j)/∂x_j]
//! ```
//!
//! with each group element sent to its twisted-conjugacy class. Here classes
//! are coarsened to first homology: `g ↦ ab(g)` in `coker(I - A)`, which is
//! well defined because `g ~ h g e(h)⁻¹` moves `ab(g)` by `(I - A) ab(h)`.
//! The sign is pinned by two models: the identity gives `χ(S′) = 1 - n`, and
//! the half-twist on two strands (a rotation with two fixed points) gives
//! two classes of index `+1`.

mod refine;
mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::free_group::{abelianization_matrix, fox_derivative, FreeGroupEndo, GroupRingElement};
use crate::matrix::IntMatrix;

pub use refine::{refine_classes, RefinedClass, Refinement, MAX_REFINE_DEPTH};
pub use snf::{smith_normal_form, ClassLabel, Cokernel, GroupStructure, SnfResult};

/// `1 - Σ_j ∂e(x_j)/∂x_j` in the group ring.
pub fn fox_trace(endo: &FreeGroupEndo) -> GroupRingElement {
    let n = endo.rank();
    let mut out = GroupRingElement::one(n);
    for j in 1..=n {
        let d = fox_derivative(endo.image(j), j).expect("index in range");
        out = &out - &d;
    }
    out
}

/// `1 - trace(A)` for the abelianized action `A`.
pub fn lefschetz_number(endo: &FreeGroupEndo) -> BigInt {
    BigInt::one() - abelianization_matrix(endo).trace()
}

/// The group `coker(I - A)` indexing homological Nielsen classes.
pub fn class_space(endo: &FreeGroupEndo) -> Cokernel {
    let a = abelianization_matrix(endo);
    let n = endo.rank();
    Cokernel::of(&(&IntMatrix::identity(n) - &a))
}

/// Fixed-point indices split by homological Nielsen class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenDecomposition {
    class_space: Cokernel,
    indices: BTreeMap<ClassLabel, BigInt>,
    lefschetz: BigInt,
}

impl NielsenDecomposition {
    /// Assembles a decomposition from raw data; zero indices are dropped.
    pub fn from_parts(
        class_space: Cokernel,
        indices: impl IntoIterator<Item = (ClassLabel, BigInt)>,
        lefschetz: BigInt,
    ) -> Self {
        let mut map: BTreeMap<ClassLabel, BigInt> = BTreeMap::new();
        for (label, index) in indices {
            *map.entry(label).or_insert_with(BigInt::zero) += index;
        }
        map.retain(|_, v| !v.is_zero());
        NielsenDecomposition {
            class_space,
            indices: map,
            lefschetz,
        }
    }

    pub fn class_space(&self) -> &Cokernel {
        &self.class_space
    }

    /// Nonzero class indices in lexicographic order of class coordinates.
    pub fn indices(&self) -> &BTreeMap<ClassLabel, BigInt> {
        &self.indices
    }

    pub fn index_of(&self, label: &ClassLabel) -> BigInt {
        self.indices
            .get(label)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn lefschetz(&self) -> &BigInt {
        &self.lefschetz
    }

    /// Sum of the class indices.
    pub fn augmentation(&self) -> BigInt {
        self.indices.values().sum()
    }

    /// `Σ_c |N_c|`.
    pub fn bound(&self) -> BigInt {
        self.indices.values().map(|v| v.abs()).sum()
    }

    /// Sum of the positive indices.
    pub fn positive_part(&self) -> BigInt {
        self.indices.values().filter(|v| v.is_positive()).sum()
    }

    /// Sum of the absolute values of the negative indices.
    pub fn negative_part(&self) -> BigInt {
        self.indices
            .values()
            .filter(|v| v.is_negative())
            .map(|v| v.abs())
            .sum()
    }

    /// Sorted `(element order, index)` pairs; independent of the basis chosen
    /// for the class space. Infinite order is `None`.
    pub fn order_index_multiset(&self) -> Vec<(Option<BigInt>, BigInt)> {
        let mut out: Vec<_> = self
            .indices
            .iter()
            .map(|(label, index)| (self.class_space.element_order(label), index.clone()))
            .collect();
        out.sort();
        out
    }
}

/// Reidemeister trace of `endo`, coarsened to homology classes.
pub fn reidemeister_trace(endo: &FreeGroupEndo) -> NielsenDecomposition {
    let space = class_space(endo);
    let trace = fox_trace(endo);
    let indices: Vec<(ClassLabel, BigInt)> = trace
        .terms()
        .map(|(word, coefficient)| (space.reduce_i64(&word.exponent_sums()), coefficient.clone()))
        .collect();
    NielsenDecomposition::from_parts(space, indices, lefschetz_number(endo))
}

/// `Σ_c |N_c|` over homological Nielsen classes; a lower bound for the sum
/// of absolute Nielsen class indices, since coarsening only merges classes.
pub fn nielsen_bound(endo: &FreeGroupEndo) -> BigInt {
    reidemeister_trace(endo).bound()
}
