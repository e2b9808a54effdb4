//! Free groups, their integral group rings, and Fox calculus.
//!
//! The fundamental group of the sphere with `d` discs removed is free on the
//! puncture loops `x_1, …, x_d` subject to `x_1 ⋯ x_d = 1`; eliminating `x_d`
//! leaves a free group of rank `d - 1`, which is what [`artin_endo`] acts on.

mod endo;
mod fox;
mod ring;

use std::cmp::Ordering;
use std::fmt;

use crate::error::FreeGroupError;

pub use endo::{
    abelianization_matrix, artin_endo, artin_endo_unreduced, eliminate_last_generator,
    FreeGroupEndo,
};
pub use fox::{fox_derivative, fox_jacobian};
pub use ring::GroupRingElement;

/// A generator `x_k` (positive) or its inverse (negative), 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator >= 1, "generators are 1-based");
        let g = i32::try_from(generator).expect("generator index fits in i32");
        Letter(if inverse { -g } else { g })
    }

    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// +1 or -1.
    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }
}

/// Appends `letter` to a reduced letter sequence, cancelling if possible.
pub(crate) fn push_reduced(letters: &mut Vec<Letter>, letter: Letter) {
    if letters.last() == Some(&letter.inverse()) {
        letters.pop();
    } else {
        letters.push(letter);
    }
}

/// A freely reduced word in a free group of fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self, FreeGroupError> {
        Self::from_letters(rank, [Letter::new(index, false)])
    }

    /// Builds and freely reduces a word, checking generator ranges.
    pub fn from_letters(
        rank: usize,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, FreeGroupError> {
        let mut out = Vec::new();
        for letter in letters {
            if letter.generator() > rank {
                return Err(FreeGroupError::GeneratorOutOfRange {
                    index: letter.generator(),
                    rank,
                });
            }
            push_reduced(&mut out, letter);
        }
        Ok(FreeWord { rank, letters: out })
    }

    /// Convenience constructor from signed indices: `3` is `x_3`, `-3` is `x_3⁻¹`.
    pub fn from_signed(rank: usize, letters: &[i32]) -> Result<Self, FreeGroupError> {
        Self::from_letters(
            rank,
            letters
                .iter()
                .map(|&l| Letter::new(l.unsigned_abs() as usize, l < 0)),
        )
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inverse()));
        FreeWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "multiplying words of different rank");
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        FreeWord {
            rank: self.rank,
            letters,
        }
    }

    pub fn pow(&self, exponent: i64) -> FreeWord {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sum of each generator: the image in `Z^rank`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank];
        for l in &self.letters {
            sums[l.generator() - 1] += l.sign();
        }
        sums
    }

    /// The prefix of the first `len` letters (already reduced).
    pub fn prefix(&self, len: usize) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters[..len].to_vec(),
        }
    }

    /// Cyclically reduced core of the word (a conjugate of it).
    pub fn cyclically_reduced(&self) -> FreeWord {
        let letters = &self.letters;
        let mut start = 0;
        let mut end = letters.len();
        while end - start >= 2 && letters[start] == letters[end - 1].inverse() {
            start += 1;
            end -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: letters[start..end].to_vec(),
        }
    }

    /// Same letters viewed in a free group of larger rank.
    pub fn widen(&self, rank: usize) -> FreeWord {
        assert!(rank >= self.rank);
        FreeWord {
            rank,
            letters: self.letters.clone(),
        }
    }

    /// Renders with custom generator names, `1` for the identity.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&names[l.generator() - 1]);
            if l.is_inverse() {
                out.push_str("^-1");
            }
        }
        out
    }
}

/// Shortlex order, so iteration over maps keyed by words is reproducible.
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.rank).map(|k| format!("x{k}")).collect();
        f.write_str(&self.format_with(&names))
    }
}
