use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::free_group::{FreeWord, Letter};
use crate::matrix::IntMatrix;
use crate::nielsen::{ClassLabel, Cokernel};

/// A finite presentation `⟨generators | relators⟩`.
///
/// Relators are stored freely and cyclically reduced, with trivial relators
/// dropped; both operations preserve the normal closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroup {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl PresentedGroup {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Self {
        let rank = generators.len();
        let relators = relators
            .into_iter()
            .map(|r| {
                assert_eq!(r.rank(), rank, "relator rank differs from generator count");
                r.cyclically_reduced()
            })
            .filter(|r| !r.is_identity())
            .collect();
        PresentedGroup {
            generators,
            relators,
        }
    }

    /// Parses relators written as space-separated `name` / `name^-1` tokens.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self, String> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let words = relators
            .iter()
            .map(|r| parse_word(&names, r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(names, words))
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|k| k + 1)
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators
            .iter()
            .map(|r| r.format_with(&self.generators))
            .collect()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(FreeWord::len).sum()
    }

    /// Relator exponent sums, one column per relator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rank(), self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            for (i, s) in r.exponent_sums().into_iter().enumerate() {
                m.set(i, j, s.into());
            }
        }
        m
    }

    pub fn abelianization(&self) -> Abelianization {
        Abelianization {
            cokernel: Cokernel::of(&self.relation_matrix()),
        }
    }

    /// The same presentation with the named generators additionally killed.
    pub fn with_killed(&self, names: &[&str]) -> PresentedGroup {
        let mut relators = self.relators.clone();
        for name in names {
            let k = self.generator_index(name).expect("known generator");
            relators.push(FreeWord::generator(self.rank(), k).expect("in range"));
        }
        PresentedGroup::new(self.generators.clone(), relators)
    }
}

fn parse_word(names: &[String], text: &str) -> Result<FreeWord, String> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, inverse) = match token.strip_suffix("^-1") {
            Some(stem) => (stem, true),
            None => (token, false),
        };
        let k = names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| format!("unknown generator `{name}`"))?;
        letters.push(Letter::new(k + 1, inverse));
    }
    FreeWord::from_letters(names.len(), letters).map_err(|e| e.to_string())
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "< {} | {} >",
            self.generators.join(", "),
            self.relator_strings().join(", ")
        )
    }
}

impl Serialize for PresentedGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PresentedGroup", 2)?;
        s.serialize_field("generators", &self.generators)?;
        s.serialize_field("relators", &self.relator_strings())?;
        s.end()
    }
}

/// First homology of a presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    cokernel: Cokernel,
}

impl Abelianization {
    pub fn cokernel(&self) -> &Cokernel {
        &self.cokernel
    }

    /// Canonical coordinates of the image of generator `k` (1-based).
    pub fn generator_class(&self, k: usize) -> ClassLabel {
        let mut v = vec![BigInt::from(0); self.cokernel.ambient_dimension()];
        v[k - 1] = BigInt::from(1);
        self.cokernel.reduce(&v)
    }

    /// Coordinates of `Σ coefficient · generator`.
    pub fn class_of(&self, combination: &[(usize, i64)]) -> ClassLabel {
        let mut v = vec![BigInt::from(0); self.cokernel.ambient_dimension()];
        for &(k, c) in combination {
            v[k - 1] += c;
        }
        self.cokernel.reduce(&v)
    }
}
