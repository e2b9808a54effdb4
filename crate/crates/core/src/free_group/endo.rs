use std::fmt;

use super::{push_reduced, FreeWord, Letter};
use crate::braid::{BraidLetter, BraidWord};
use crate::error::FreeGroupError;
use crate::matrix::IntMatrix;

/// An endomorphism of a free group given by the images of its generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeGroupEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeGroupEndo {
    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo {
            rank,
            images: (1..=rank)
                .map(|k| FreeWord::generator(rank, k).expect("in range"))
                .collect(),
        }
    }

    pub fn new(rank: usize, images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        if images.len() != rank {
            return Err(FreeGroupError::RankMismatch {
                left: rank,
                right: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(FreeGroupError::RankMismatch {
                left: rank,
                right: bad.rank(),
            });
        }
        Ok(FreeGroupEndo { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    pub fn apply(&self, word: &FreeWord) -> FreeWord {
        assert_eq!(
            word.rank(),
            self.rank,
            "applying endomorphism to word of other rank"
        );
        substitute(&self.images, self.rank, word)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeGroupEndo) -> FreeGroupEndo {
        assert_eq!(self.rank, other.rank);
        FreeGroupEndo {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Total length of the generator images.
    pub fn size(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

impl fmt::Display for FreeGroupEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, image) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", k + 1, image)?;
        }
        Ok(())
    }
}

/// Replaces each `x_k` in `word` by `images[k-1]`, reducing as it goes.
fn substitute(images: &[FreeWord], rank: usize, word: &FreeWord) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::new();
    for &l in word.letters() {
        let image = &images[l.generator() - 1];
        if l.is_inverse() {
            for &m in image.letters().iter().rev() {
                push_reduced(&mut letters, m.inverse());
            }
        } else {
            for &m in image.letters() {
                push_reduced(&mut letters, m);
            }
        }
    }
    FreeWord::from_reduced_unchecked(rank, letters)
}

/// Artin action of one letter on `F_d = ⟨x_1, …, x_d⟩`.
///
/// `s_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`; `s_i⁻¹: x_i ↦ x_{i+1},
/// x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`. A framing twist acts on `π₁` by
/// conjugating `x_k` by itself, i.e. trivially.
fn letter_endo(rank: usize, letter: BraidLetter) -> FreeGroupEndo {
    let mut endo = FreeGroupEndo::identity(rank);
    if let BraidLetter::Artin { index: i, inverse } = letter {
        let w = |s: &[i32]| FreeWord::from_signed(rank, s).expect("in range");
        let (a, b) = (i as i32, i as i32 + 1);
        if inverse {
            endo.images[i - 1] = w(&[b]);
            endo.images[i] = w(&[-b, a, b]);
        } else {
            endo.images[i - 1] = w(&[a, b, -a]);
            endo.images[i] = w(&[a]);
        }
    }
    endo
}

/// Artin action on the free group of rank `d` before imposing `x_1 ⋯ x_d = 1`.
pub fn artin_endo_unreduced(braid: &BraidWord) -> FreeGroupEndo {
    let d = braid.strands();
    braid
        .letters()
        .iter()
        .fold(FreeGroupEndo::identity(d), |acc, &l| {
            acc.compose(&letter_endo(d, l))
        })
}

/// Passes an endomorphism of `F_d` that preserves the normal closure of
/// `x_1 ⋯ x_d` to the quotient, free on `x_1, …, x_{d-1}`, by substituting
/// `x_d = (x_1 ⋯ x_{d-1})⁻¹`.
pub fn eliminate_last_generator(endo: &FreeGroupEndo) -> FreeGroupEndo {
    let d = endo.rank();
    assert!(d >= 2);
    let n = d - 1;
    let mut substitution: Vec<FreeWord> = (1..=n)
        .map(|k| FreeWord::generator(n, k).expect("in range"))
        .collect();
    let last =
        FreeWord::from_letters(n, (1..=n).rev().map(|k| Letter::new(k, true))).expect("in range");
    substitution.push(last);
    let images = endo.images()[..n]
        .iter()
        .map(|w| substitute(&substitution, n, w))
        .collect();
    FreeGroupEndo { rank: n, images }
}

/// The braid's action on `π₁(S′)`, free of rank `d - 1`.
///
/// Computed letter by letter in rank `d - 1`; a word `a·b` acts as
/// `φ_a ∘ φ_b`.
pub fn artin_endo(braid: &BraidWord) -> FreeGroupEndo {
    let d = braid.strands();
    braid
        .letters()
        .iter()
        .fold(FreeGroupEndo::identity(d - 1), |acc, &l| {
            acc.compose(&eliminate_last_generator(&letter_endo(d, l)))
        })
}

/// `A[i][j]` = exponent sum of `x_i` in the image of `x_j`.
pub fn abelianization_matrix(endo: &FreeGroupEndo) -> IntMatrix {
    let n = endo.rank();
    let mut m = IntMatrix::zeros(n, n);
    for (j, image) in endo.images().iter().enumerate() {
        for (i, s) in image.exponent_sums().into_iter().enumerate() {
            m.set(i, j, s.into());
        }
    }
    m
}
