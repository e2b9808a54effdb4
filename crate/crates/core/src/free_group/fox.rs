use num_bigint::BigInt;
use num_traits::One;

use super::{FreeGroupEndo, FreeWord, GroupRingElement};
use crate::error::FreeGroupError;

/// Fox derivative `∂w/∂x_j`.
///
/// Expanding the product rule over `w = y_1 ⋯ y_m` gives one term per
/// occurrence of `x_j^{±1}`: the prefix before an `x_j`, or minus the prefix
/// through an `x_j⁻¹`.
pub fn fox_derivative(word: &FreeWord, j: usize) -> Result<GroupRingElement, FreeGroupError> {
    if j == 0 || j > word.rank() {
        return Err(FreeGroupError::GeneratorOutOfRange {
            index: j,
            rank: word.rank(),
        });
    }
    let mut out = GroupRingElement::zero(word.rank());
    for (pos, letter) in word.letters().iter().enumerate() {
        if letter.generator() != j {
            continue;
        }
        if letter.is_inverse() {
            out.add_term(word.prefix(pos + 1), -BigInt::one());
        } else {
            out.add_term(word.prefix(pos), BigInt::one());
        }
    }
    Ok(out)
}

/// Fox Jacobian `J[i][j] = ∂e(x_j)/∂x_i`.
pub fn fox_jacobian(endo: &FreeGroupEndo) -> Vec<Vec<GroupRingElement>> {
    let n = endo.rank();
    (1..=n)
        .map(|i| {
            endo.images()
                .iter()
                .map(|image| fox_derivative(image, i).expect("index in range"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::from_signed(rank, letters).unwrap()
    }

    #[test]
    fn base_cases() {
        let d = fox_derivative(&w(2, &[1]), 1).unwrap();
        assert_eq!(d, GroupRingElement::one(2));
        assert!(fox_derivative(&w(2, &[1]), 2).unwrap().is_zero());
        let inv = fox_derivative(&w(1, &[-1]), 1).unwrap();
        assert_eq!(
            inv,
            GroupRingElement::monomial(w(1, &[-1]), BigInt::from(-1))
        );
    }

    #[test]
    fn product_of_distinct_generators() {
        let d = fox_derivative(&w(2, &[1, 2]), 2).unwrap();
        assert_eq!(d, GroupRingElement::from_word(w(2, &[1])));
    }

    #[test]
    fn out_of_range_index() {
        assert!(fox_derivative(&w(2, &[1]), 3).is_err());
        assert!(fox_derivative(&w(2, &[1]), 0).is_err());
    }

    #[test]
    fn conjugate_derivative() {
        // ∂(x1 x2 x1⁻¹)/∂x1 = 1 - x1 x2 x1⁻¹
        let d = fox_derivative(&w(2, &[1, 2, -1]), 1).unwrap();
        let expected = &GroupRingElement::one(2) - &GroupRingElement::from_word(w(2, &[1, 2, -1]));
        assert_eq!(d, expected);
    }
}
