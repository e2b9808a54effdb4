//! Dimension-level consequences of Nielsen data for Floer groups.
//!
//! Nothing here computes a Floer complex. Every figure is either a lower
//! bound derived from fixed-point indices (`exact = false`) or, when the
//! caller supplies an exact `dim HF_*(β)`, the arithmetic that follows from it.

use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::braid::{BraidWord, TransitivityMode};
use crate::error::BraidError;
use crate::nielsen::NielsenDecomposition;

/// Even and odd dimensions of a `Z/2`-graded group over the Novikov field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FloerDims {
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub even: BigInt,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub odd: BigInt,
    /// `false` means both entries are lower bounds.
    pub exact: bool,
}

impl FloerDims {
    pub fn exact(even: impl Into<BigInt>, odd: impl Into<BigInt>) -> Self {
        FloerDims {
            even: even.into(),
            odd: odd.into(),
            exact: true,
        }
    }

    /// Lower bounds from class indices: a class of index `N > 0` forces at
    /// least `N` even generators, one of index `N < 0` at least `|N|` odd ones.
    pub fn bounded_by(nd: &NielsenDecomposition) -> Self {
        FloerDims {
            even: nd.positive_part(),
            odd: nd.negative_part(),
            exact: false,
        }
    }

    pub fn total(&self) -> BigInt {
        &self.even + &self.odd
    }

    pub fn euler_characteristic(&self) -> BigInt {
        &self.even - &self.odd
    }
}

impl Add for &FloerDims {
    type Output = FloerDims;

    fn add(self, rhs: &FloerDims) -> FloerDims {
        FloerDims {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
            exact: self.exact && rhs.exact,
        }
    }
}

/// Tensor product with `H_*(T²)`, whose graded dimensions are `(2, 2)`.
pub fn suspend_dims(f: &FloerDims) -> FloerDims {
    let both = BigInt::from(2) * f.total();
    FloerDims {
        even: both.clone(),
        odd: both,
        exact: f.exact,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfBound {
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub lower_bound: BigInt,
    /// `dim HF_*(β) ≡ parity (mod 2)`.
    pub parity: u8,
}

/// `dim HF_*(β) ≥ Σ_c |N_c|` and `dim HF_*(β) ≡ L (mod 2)`.
pub fn hf_beta_bound(nd: &NielsenDecomposition) -> HfBound {
    let parity = nd.lefschetz().mod_floor(&BigInt::from(2));
    HfBound {
        lower_bound: nd.bound(),
        parity: parity.to_u8().expect("0 or 1"),
    }
}

/// A dimension that is either known or bounded below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionClaim {
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub value: BigInt,
    pub exact: bool,
}

impl DimensionClaim {
    fn scaled(&self, factor: i64) -> DimensionClaim {
        DimensionClaim {
            value: &self.value * factor,
            exact: self.exact,
        }
    }

    pub fn relation(&self) -> &'static str {
        if self.exact {
            "="
        } else {
            ">="
        }
    }
}

/// A nonzero torsion class `k·[l₂]` of `H₁(M^β) ≅ Z ⊕ Z/d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionClass {
    pub label: String,
    /// Coordinates in `Z ⊕ Z/d`.
    pub coordinates: [u64; 2],
}

/// Predicted Floer summands of the surgered 4-manifold `M^β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MBetaPrediction {
    pub strands: usize,
    /// `dim HF_*(φ_{a₁}; [l₂]) = 4 · dim HF_*(β)`.
    pub l2_summand: DimensionClaim,
    pub l2_summand_graded: FloerDims,
    /// Other nonzero torsion classes `c`, where `HF_*(φ_{a₁}; c) = 0`.
    pub vanishing_classes: Vec<TorsionClass>,
    /// Sum over both generators `±a` and all nonzero torsion classes: `8 · dim HF_*(β)`.
    pub basis_free_total: DimensionClaim,
}

/// Predictions from a known or bounded `HF_*(β)`.
pub fn predict_from_dims(strands: usize, hf_beta: &FloerDims) -> MBetaPrediction {
    let dim = DimensionClaim {
        value: hf_beta.total(),
        exact: hf_beta.exact,
    };
    let vanishing_classes = (2..strands as u64)
        .map(|k| TorsionClass {
            label: format!("{k}[l2]"),
            coordinates: [0, k],
        })
        .collect();
    MBetaPrediction {
        strands,
        l2_summand: dim.scaled(4),
        l2_summand_graded: suspend_dims(hf_beta),
        vanishing_classes,
        basis_free_total: dim.scaled(8),
    }
}

/// Predictions from the Nielsen lower bound. Requires a transitive braid.
pub fn predict_mbeta(
    braid: &BraidWord,
    nd: &NielsenDecomposition,
    mode: TransitivityMode,
) -> Result<MBetaPrediction, BraidError> {
    if !braid.transitivity(mode).is_transitive() {
        return Err(BraidError::NotTransitive(braid.to_string()));
    }
    Ok(predict_from_dims(
        braid.strands(),
        &FloerDims::bounded_by(nd),
    ))
}

/// Displayed, not computed: Floer homology of monotone manifolds.
pub const MONOTONE_STATEMENT: &str = "Le-Ono: if [omega] = lambda c1(M) with lambda != 0, \
     then HF_*(phi_a) = H_*(M; Lambda_a) for the flat Novikov bundle Lambda_a";

/// Caveat attached to every `M^β` prediction.
pub const SYMPLECTIC_CLASS_CAVEAT: &str = "predictions hold for the symplectic class fixed by the \
     construction; a small change of the T^2 area, without rescaling a, removes all fixed points \
     and the groups vanish";

/// Which symbols the prediction refers to.
pub const SYMBOLS: [(&str, &str); 3] = [
    ("a1", "class in H^1(M^beta; R) with <a1, [l1]> = 1"),
    ("l1", "S^1 x {0} x {z0}, image (1, 0) in Z + Z/d"),
    ("l2", "{0} x S^1 x {z0}, image (0, 1) in Z + Z/d"),
];

/// Whether a bound is nontrivial, i.e. forces some Floer homology.
pub fn is_nontrivial(bound: &HfBound) -> bool {
    !bound.lower_bound.is_zero()
}
