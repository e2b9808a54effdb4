//! Bounded search for twisted conjugators inside homology classes.
//!
//! Terms of the Fox trace start out as separate free-group classes. Two terms
//! `g`, `g′` in the same homology class are merged once some `h` with
//! `|h| ≤ depth` satisfies `g′ = h g e(h)⁻¹`. Classes that were not merged
//! are not proven distinct, so the refined sum is informational; only the
//! homological bound is certified.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{class_space, fox_trace, ClassLabel};
use crate::free_group::{FreeGroupEndo, FreeWord, Letter};

/// Longest conjugator searched; larger requests are clamped.
pub const MAX_REFINE_DEPTH: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedClass {
    /// Shortlex-least word among the merged terms.
    pub representative: FreeWord,
    pub homology_class: ClassLabel,
    pub index: BigInt,
    /// Number of Fox-trace terms merged into this class.
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub depth: usize,
    /// Classes with nonzero index, ordered by homology class then representative.
    pub classes: Vec<RefinedClass>,
}

impl Refinement {
    /// `Σ |index|` over refined classes; not a certified bound.
    pub fn sum_abs(&self) -> BigInt {
        self.classes.iter().map(|c| c.index.abs()).sum()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

pub fn refine_classes(endo: &FreeGroupEndo, depth: usize) -> Refinement {
    let depth = depth.min(MAX_REFINE_DEPTH);
    let space = class_space(endo);
    let trace = fox_trace(endo);
    let mut groups: BTreeMap<ClassLabel, Vec<(FreeWord, BigInt)>> = BTreeMap::new();
    for (word, coefficient) in trace.terms() {
        groups
            .entry(space.reduce_i64(&word.exponent_sums()))
            .or_default()
            .push((word.clone(), coefficient.clone()));
    }

    let mut classes = Vec::new();
    for (label, members) in groups {
        let lookup: HashMap<&FreeWord, usize> = members
            .iter()
            .enumerate()
            .map(|(k, (w, _))| (w, k))
            .collect();
        let mut uf = UnionFind::new(members.len());
        if members.len() > 1 && depth > 0 {
            let mut search = ConjugatorSearch {
                endo,
                depth,
                prefix: Vec::new(),
                image: FreeWord::identity(endo.rank()),
            };
            for (k, (word, _)) in members.iter().enumerate() {
                search.run(&mut |h, eh| {
                    let moved = h.mul(word).mul(&eh.inverse());
                    if let Some(&other) = lookup.get(&moved) {
                        uf.union(k, other);
                    }
                });
            }
        }
        let mut merged: BTreeMap<usize, (FreeWord, BigInt, usize)> = BTreeMap::new();
        for (k, (word, coefficient)) in members.iter().enumerate() {
            let root = uf.find(k);
            let entry = merged
                .entry(root)
                .or_insert_with(|| (word.clone(), BigInt::zero(), 0));
            if *word < entry.0 {
                entry.0 = word.clone();
            }
            entry.1 += coefficient;
            entry.2 += 1;
        }
        let mut found: Vec<RefinedClass> = merged
            .into_values()
            .filter(|(_, index, _)| !index.is_zero())
            .map(|(representative, index, terms)| RefinedClass {
                representative,
                homology_class: label.clone(),
                index,
                terms,
            })
            .collect();
        found.sort_by(|a, b| a.representative.cmp(&b.representative));
        classes.extend(found);
    }
    Refinement { depth, classes }
}

/// Depth-first enumeration of reduced words `h`, carrying `e(h)` along.
struct ConjugatorSearch<'a> {
    endo: &'a FreeGroupEndo,
    depth: usize,
    prefix: Vec<Letter>,
    image: FreeWord,
}

impl ConjugatorSearch<'_> {
    fn run(&mut self, visit: &mut impl FnMut(&FreeWord, &FreeWord)) {
        self.prefix.clear();
        self.image = FreeWord::identity(self.endo.rank());
        self.step(visit);
    }

    fn step(&mut self, visit: &mut impl FnMut(&FreeWord, &FreeWord)) {
        if self.prefix.len() >= self.depth {
            return;
        }
        let n = self.endo.rank();
        for g in 1..=n {
            for inverse in [false, true] {
                let letter = Letter::new(g, inverse);
                if self.prefix.last() == Some(&letter.inverse()) {
                    continue;
                }
                let image_letter = if inverse {
                    self.endo.image(g).inverse()
                } else {
                    self.endo.image(g).clone()
                };
                let saved = self.image.clone();
                self.prefix.push(letter);
                self.image = saved.mul(&image_letter);
                let h = FreeWord::from_letters(n, self.prefix.iter().copied()).expect("in range");
                visit(&h, &self.image);
                self.step(visit);
                self.prefix.pop();
                self.image = saved;
            }
        }
    }
}
