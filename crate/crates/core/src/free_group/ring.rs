use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::FreeWord;

/// A finite `Z`-linear combination of free-group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        GroupRingElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(FreeWord::identity(rank))
    }

    pub fn from_word(word: FreeWord) -> Self {
        Self::monomial(word, BigInt::one())
    }

    pub fn monomial(word: FreeWord, coefficient: BigInt) -> Self {
        let mut out = Self::zero(word.rank());
        out.add_term(word, coefficient);
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in shortlex order of their words; coefficients are nonzero.
    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &FreeWord) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, word: FreeWord, coefficient: BigInt) {
        assert_eq!(word.rank(), self.rank, "rank mismatch in group ring");
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum of coefficients (the ring map to `Z` sending every word to 1).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Left multiplication by a single group element.
    pub fn left_mul_word(&self, word: &FreeWord) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(word.mul(w), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * factor);
        }
        out
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_identity() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*({w})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> FreeWord {
        FreeWord::from_signed(2, letters).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut e = GroupRingElement::from_word(w(&[1]));
        e.add_term(w(&[1]), BigInt::from(-1));
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn ring_arithmetic() {
        let x1 = GroupRingElement::from_word(w(&[1]));
        let one = GroupRingElement::one(2);
        let a = &x1 - &one;
        let b = &x1 + &one;
        // (x1 - 1)(x1 + 1) = x1^2 - 1
        let prod = &a * &b;
        assert_eq!(prod.coefficient(&w(&[1, 1])), BigInt::one());
        assert_eq!(prod.coefficient(&FreeWord::identity(2)), BigInt::from(-1));
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(prod.augmentation(), BigInt::zero());
        assert_eq!(prod.to_string(), "-1 + x1 x1");
    }
}
