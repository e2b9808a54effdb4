//! Framed spherical braid words.
//!
//! A word is a sequence of Artin generators `s_i` (1 ≤ i < d) and framing
//! twists `t_k` (1 ≤ k ≤ d), kept freely reduced. Words compose as maps:
//! in `a·b` the factor `b` acts first, so `s1 s2 … s_{d-1}` induces the
//! cycle `1 → 2 → … → d → 1`. The same order is used for the induced
//! free-group endomorphisms.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{BraidError, ParseError};

/// One letter of a braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidLetter {
    /// Artin half-twist exchanging strands `i` and `i + 1`.
    Artin { index: usize, inverse: bool },
    /// Dehn twist around a small loop encircling marked point `k`.
    FrameTwist { index: usize, inverse: bool },
}

impl BraidLetter {
    pub fn inverse(self) -> Self {
        match self {
            BraidLetter::Artin { index, inverse } => BraidLetter::Artin {
                index,
                inverse: !inverse,
            },
            BraidLetter::FrameTwist { index, inverse } => BraidLetter::FrameTwist {
                index,
                inverse: !inverse,
            },
        }
    }

    fn cancels(self, other: Self) -> bool {
        self.inverse() == other
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, index, inverse) = match *self {
            BraidLetter::Artin { index, inverse } => ('s', index, inverse),
            BraidLetter::FrameTwist { index, inverse } => ('t', index, inverse),
        };
        write!(f, "{c}{index}")?;
        if inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced framed spherical braid word on `d ≥ 2` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// Builds a word, checking index ranges and freely reducing.
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for letter in &letters {
            check_letter(strands, *letter)?;
        }
        Ok(BraidWord {
            strands,
            letters: free_reduce(letters),
        })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// `s1 s2 … s_{d-1}`, the standard transitive braid.
    pub fn standard_cycle(strands: usize) -> Result<Self, BraidError> {
        let letters = (1..strands)
            .map(|index| BraidLetter::Artin {
                index,
                inverse: false,
            })
            .collect();
        Self::new(strands, letters)
    }

    /// Positive word of minimal length inducing `perm` (one letter per
    /// inversion).
    pub fn positive_lift(perm: &Permutation) -> Result<Self, BraidError> {
        let mut q = perm.images().to_vec();
        let mut swaps = Vec::new();
        // q ∘ (i i+1) swaps entries i and i+1 of the image table.
        while let Some(i) = (1..q.len()).find(|&i| q[i - 1] > q[i]) {
            q.swap(i - 1, i);
            swaps.push(i);
        }
        let letters = swaps
            .into_iter()
            .rev()
            .map(|index| BraidLetter::Artin {
                index,
                inverse: false,
            })
            .collect();
        Self::new(perm.len(), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed word with every letter inverted.
    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`, freely reduced.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters: free_reduce(letters),
        })
    }

    /// Permutation of the marked points: the composite of the transpositions
    /// `(i i+1)` of the Artin letters, rightmost applied first.
    pub fn induced_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        // images[k] = p(k); prepending a transposition t on the left of the
        // product is p ↦ t ∘ p, so scan the word right to left.
        for letter in self.letters.iter().rev() {
            if let BraidLetter::Artin { index, .. } = *letter {
                for image in images.iter_mut() {
                    if *image == index {
                        *image = index + 1;
                    } else if *image == index + 1 {
                        *image = index;
                    }
                }
            }
        }
        Permutation { images }
    }

    /// Strict transitivity: the induced permutation is `(1 2 … d)`.
    pub fn is_transitive(&self) -> bool {
        self.induced_permutation().is_standard_cycle()
    }

    /// Checks transitivity in the requested mode. In relaxed mode any
    /// `d`-cycle is accepted and the relabeling conjugating it to
    /// `(1 2 … d)` is returned.
    pub fn transitivity(&self, mode: TransitivityMode) -> Transitivity {
        let perm = self.induced_permutation();
        if perm.is_standard_cycle() {
            return Transitivity::Standard;
        }
        match mode {
            TransitivityMode::Strict => Transitivity::NotTransitive,
            TransitivityMode::Relaxed => match perm.relabeling_to_standard_cycle() {
                Some(relabeling) => Transitivity::Relabeled(relabeling),
                None => Transitivity::NotTransitive,
            },
        }
    }
}

fn check_letter(strands: usize, letter: BraidLetter) -> Result<(), BraidError> {
    match letter {
        BraidLetter::Artin { index, .. } if index == 0 || index >= strands => {
            Err(BraidError::ArtinIndex {
                token: letter.to_string(),
                index,
                max: strands - 1,
            })
        }
        BraidLetter::FrameTwist { index, .. } if index == 0 || index > strands => {
            Err(BraidError::TwistIndex {
                token: letter.to_string(),
                index,
                max: strands,
            })
        }
        _ => Ok(()),
    }
}

fn free_reduce(letters: Vec<BraidLetter>) -> Vec<BraidLetter> {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(letters.len());
    for letter in letters {
        match out.last() {
            Some(last) if last.cancels(letter) => {
                out.pop();
            }
            _ => out.push(letter),
        }
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={};", self.strands)?;
        for letter in &self.letters {
            write!(f, " {letter}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `d=INT; token*` where `token := (s|t) INT (^-1)?`.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let mut cursor = Cursor { text, pos: 0 };
    cursor.skip_ws();
    cursor.expect("d=")?;
    cursor.skip_ws();
    let strands_at = cursor.pos;
    let strands = cursor.integer()?;
    cursor.skip_ws();
    cursor.expect(";")?;

    let mut letters = Vec::new();
    loop {
        let had_ws = cursor.skip_ws();
        if cursor.at_end() {
            break;
        }
        if !letters.is_empty() && !had_ws {
            return Err(cursor.error("expected whitespace between tokens"));
        }
        let start = cursor.pos;
        let kind = match cursor.peek() {
            Some('s') => 's',
            Some('t') => 't',
            _ => return Err(cursor.error("expected generator `s` or `t`")),
        };
        cursor.pos += 1;
        let index = cursor.integer()?;
        let inverse = cursor.text[cursor.pos..].starts_with("^-1");
        if inverse {
            cursor.pos += 3;
        }
        let letter = if kind == 's' {
            BraidLetter::Artin { index, inverse }
        } else {
            BraidLetter::FrameTwist { index, inverse }
        };
        if strands >= 2 {
            check_letter(strands, letter).map_err(|source| ParseError::Range {
                position: start,
                source,
            })?;
        }
        letters.push(letter);
    }

    BraidWord::new(strands, letters).map_err(|source| ParseError::Range {
        position: strands_at,
        source,
    })
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
        self.pos > start
    }

    fn expect(&mut self, literal: &str) -> Result<(), ParseError> {
        if self.text[self.pos..].starts_with(literal) {
            self.pos += literal.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{literal}`")))
        }
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        let digits = self.text[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.text[self.pos..self.pos + digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }
}

/// A permutation of `{1, …, d}` stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (1..=size).collect(),
        }
    }

    /// Returns `None` unless `images` is a bijection of `{1, …, len}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn standard_cycle(size: usize) -> Self {
        Permutation {
            images: (1..=size).map(|k| k % size + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &image) in self.images.iter().enumerate() {
            images[image - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(k, &i)| k + 1 == i)
            .count()
    }

    pub fn is_standard_cycle(&self) -> bool {
        *self == Permutation::standard_cycle(self.len())
    }

    /// True when the permutation is a single cycle through every point.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.len();
        let mut point = 1;
        for step in 1..=n {
            point = self.apply(point);
            if point == 1 {
                return step == n;
            }
        }
        false
    }

    /// For a full cycle `p`, the relabeling `r` with `r ∘ p ∘ r⁻¹ = (1 2 … d)`,
    /// normalized by `r(1) = 1`.
    pub fn relabeling_to_standard_cycle(&self) -> Option<Permutation> {
        if !self.is_full_cycle() {
            return None;
        }
        let mut images = vec![0; self.len()];
        let mut point = 1;
        for label in 1..=self.len() {
            images[point - 1] = label;
            point = self.apply(point);
        }
        Some(Permutation { images })
    }

    /// Disjoint cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut point = start;
            let mut first = true;
            while !seen[point - 1] {
                seen[point - 1] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&point.to_string());
                first = false;
                point = self.apply(point);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TransitivityMode {
    #[default]
    Strict,
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transitivity {
    /// Induced permutation is exactly `(1 2 … d)`.
    Standard,
    /// A `d`-cycle, conjugate to `(1 2 … d)` by the given relabeling.
    Relabeled(Permutation),
    NotTransitive,
}

impl Transitivity {
    pub fn is_transitive(&self) -> bool {
        !matches!(self, Transitivity::NotTransitive)
    }
}
