//! Length-reducing Tietze moves with a deterministic move order.

use serde::Serialize;

use super::PresentedGroup;
use crate::free_group::{push_reduced, FreeWord, Letter};

pub const DEFAULT_EFFORT: usize = 1000;

/// Longest relator tried as a substitution source.
const SUBSTITUTION_SOURCE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TietzeOutcome {
    pub group: PresentedGroup,
    pub moves: usize,
    /// `Some(d)` when the result is literally `⟨u, v | [u, v], v^d⟩`.
    pub standard_product_order: Option<u64>,
    /// No further move applies (as opposed to running out of budget).
    pub exhausted_moves: bool,
}

impl TietzeOutcome {
    pub fn status(&self) -> &'static str {
        if self.standard_product_order.is_some() {
            "standard"
        } else {
            "unresolved"
        }
    }
}

struct Work {
    names: Vec<String>,
    relators: Vec<Vec<Letter>>,
}

pub fn tietze_simplify(group: &PresentedGroup, effort_budget: usize) -> TietzeOutcome {
    let mut work = Work {
        names: group.generators().to_vec(),
        relators: group
            .relators()
            .iter()
            .map(|r| r.letters().to_vec())
            .collect(),
    };
    let length_cap = 4 * group.total_length() + 256;
    let mut moves = 0;
    let mut exhausted = false;
    work.normalize();
    while moves < effort_budget {
        if work.eliminate_generator(length_cap) || work.shorten_by_substitution() {
            moves += 1;
            work.normalize();
        } else {
            exhausted = true;
            break;
        }
    }
    let rank = work.names.len();
    let simplified = PresentedGroup::new(
        work.names,
        work.relators
            .into_iter()
            .map(|r| FreeWord::from_letters(rank, r).expect("in range"))
            .collect(),
    );
    TietzeOutcome {
        standard_product_order: standard_product_order(&simplified),
        group: simplified,
        moves,
        exhausted_moves: exhausted,
    }
}

impl Work {
    fn normalize(&mut self) {
        let mut seen: Vec<Vec<Letter>> = Vec::new();
        let mut out = Vec::new();
        for r in self.relators.drain(..) {
            let r = cyclic_reduce(&free_reduce(&r));
            if r.is_empty() {
                continue;
            }
            let key = canonical_cyclic(&r);
            if !seen.contains(&key) {
                seen.push(key);
                out.push(r);
            }
        }
        self.relators = out;
    }

    /// Solves a relator for a generator occurring in it exactly once and
    /// substitutes. Prefers short relators, then later generators.
    fn eliminate_generator(&mut self, length_cap: usize) -> bool {
        let mut candidates: Vec<(usize, std::cmp::Reverse<usize>, usize)> = Vec::new();
        for (ri, r) in self.relators.iter().enumerate() {
            for g in 1..=self.names.len() {
                if r.iter().filter(|l| l.generator() == g).count() == 1 {
                    candidates.push((r.len(), std::cmp::Reverse(g), ri));
                }
            }
        }
        candidates.sort();
        for (_, std::cmp::Reverse(g), ri) in candidates {
            let r = &self.relators[ri];
            let pos = r.iter().position(|l| l.generator() == g).expect("present");
            // r = a g^e b  ⇒  g^e b a = 1  ⇒  g = (b a)^{-e}
            let mut ba: Vec<Letter> = r[pos + 1..].to_vec();
            ba.extend_from_slice(&r[..pos]);
            let value: Vec<Letter> = if r[pos].is_inverse() {
                free_reduce(&ba)
            } else {
                free_reduce(&invert(&ba))
            };
            let new_relators: Vec<Vec<Letter>> = self
                .relators
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != ri)
                .map(|(_, other)| substitute(other, g, &value))
                .collect();
            let total: usize = new_relators.iter().map(Vec::len).sum();
            if total > length_cap {
                continue;
            }
            self.relators = new_relators
                .into_iter()
                .map(|w| renumber_after_removal(&w, g))
                .collect();
            self.names.remove(g - 1);
            return true;
        }
        false
    }

    /// Replaces a long piece of one relator by the shorter complement of a
    /// cyclic conjugate of another.
    fn shorten_by_substitution(&mut self) -> bool {
        for si in 0..self.relators.len() {
            let slen = self.relators[si].len();
            if slen > SUBSTITUTION_SOURCE_CAP {
                continue;
            }
            let variants = cyclic_variants(&self.relators[si]);
            for ti in 0..self.relators.len() {
                if ti == si || self.relators[ti].len() < slen / 2 + 1 {
                    continue;
                }
                if let Some(shorter) = shorten_with(&self.relators[ti], &variants) {
                    self.relators[ti] = shorter;
                    return true;
                }
            }
        }
        false
    }
}

/// All rotations of `r` and of its inverse.
fn cyclic_variants(r: &[Letter]) -> Vec<Vec<Letter>> {
    let inv = invert(r);
    let mut out = Vec::with_capacity(2 * r.len());
    for base in [r.to_vec(), inv] {
        for k in 0..base.len() {
            let mut v = base[k..].to_vec();
            v.extend_from_slice(&base[..k]);
            out.push(v);
        }
    }
    out
}

/// If a rotation of `target` starts with more than half of a variant `v`,
/// replace that prefix by the inverse of the rest of `v`.
fn shorten_with(target: &[Letter], variants: &[Vec<Letter>]) -> Option<Vec<Letter>> {
    let n = target.len();
    for rot in 0..n {
        let rotated: Vec<Letter> = target[rot..]
            .iter()
            .chain(&target[..rot])
            .copied()
            .collect();
        for v in variants {
            let len = v.len();
            let common = rotated.iter().zip(v).take_while(|(a, b)| a == b).count();
            if 2 * common > len {
                let mut out = invert(&v[common..]);
                out.extend_from_slice(&rotated[common..]);
                return Some(out);
            }
        }
    }
    None
}

fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

fn free_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        push_reduced(&mut out, l);
    }
    out
}

fn cyclic_reduce(w: &[Letter]) -> Vec<Letter> {
    let (mut start, mut end) = (0, w.len());
    while end - start >= 2 && w[start] == w[end - 1].inverse() {
        start += 1;
        end -= 1;
    }
    w[start..end].to_vec()
}

/// Least rotation of the word or its inverse.
fn canonical_cyclic(w: &[Letter]) -> Vec<Letter> {
    cyclic_variants(w).into_iter().min().unwrap_or_default()
}

fn substitute(w: &[Letter], g: usize, value: &[Letter]) -> Vec<Letter> {
    let inv = invert(value);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if l.generator() == g {
            for &m in if l.is_inverse() { &inv } else { value } {
                push_reduced(&mut out, m);
            }
        } else {
            push_reduced(&mut out, l);
        }
    }
    out
}

fn renumber_after_removal(w: &[Letter], removed: usize) -> Vec<Letter> {
    w.iter()
        .map(|l| {
            let g = l.generator();
            debug_assert_ne!(g, removed);
            if g > removed {
                Letter::new(g - 1, l.is_inverse())
            } else {
                *l
            }
        })
        .collect()
}

/// Recognizes `⟨u, v | [u, v], v^d⟩` up to relator order, cyclic rotation,
/// and inversion, with `u`, `v` either way round.
pub fn standard_product_order(group: &PresentedGroup) -> Option<u64> {
    if group.rank() != 2 || group.relators().len() != 2 {
        return None;
    }
    for (u, v) in [(1usize, 2usize), (2, 1)] {
        let commutator = [
            Letter::new(u, false),
            Letter::new(v, false),
            Letter::new(u, true),
            Letter::new(v, true),
        ];
        let commutator_key = canonical_cyclic(&commutator);
        for (ci, pi) in [(0usize, 1usize), (1, 0)] {
            let c = group.relators()[ci].letters();
            let p = group.relators()[pi].letters();
            if canonical_cyclic(c) != commutator_key || p.is_empty() {
                continue;
            }
            if p.iter().all(|l| l.generator() == v) && p.windows(2).all(|w| w[0] == w[1]) {
                return Some(p.len() as u64);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eliminates_trivial_generator() {
        let g = PresentedGroup::parse(&["a", "b"], &["b"]).unwrap();
        let out = tietze_simplify(&g, DEFAULT_EFFORT);
        assert_eq!(out.group.to_string(), "< a |  >");
        assert!(out.exhausted_moves);
    }

    #[test]
    fn drops_freely_trivial_relator() {
        let g = PresentedGroup::new(
            vec!["a".into()],
            vec![FreeWord::from_signed(1, &[1, -1]).unwrap()],
        );
        let out = tietze_simplify(&g, DEFAULT_EFFORT);
        assert_eq!(out.group.generators(), &["a".to_string()]);
        assert!(out.group.relators().is_empty());
    }

    #[test]
    fn recognizes_standard_form() {
        let g = PresentedGroup::parse(&["u", "v"], &["v^-1 u^-1 v u", "v^-1 v^-1 v^-1"]).unwrap();
        assert_eq!(standard_product_order(&g), Some(3));
        let not = PresentedGroup::parse(&["u", "v"], &["u v u^-1 v^-1", "u u"]).unwrap();
        assert_eq!(standard_product_order(&not), Some(2));
        let free = PresentedGroup::parse(&["u", "v"], &["u v u^-1 v^-1"]).unwrap();
        assert_eq!(standard_product_order(&free), None);
    }

    #[test]
    fn substitution_shortens() {
        // second relator contains most of the first
        let g = PresentedGroup::parse(&["a", "b"], &["a a a b", "a a a b b a"]).unwrap();
        let before = g.abelianization();
        let out = tietze_simplify(&g, DEFAULT_EFFORT);
        assert!(out.group.total_length() < g.total_length());
        assert_eq!(
            out.group.abelianization().cokernel().to_string(),
            before.cokernel().to_string()
        );
    }

    #[test]
    fn respects_budget() {
        let g = PresentedGroup::parse(&["a", "b", "c"], &["a", "b", "c"]).unwrap();
        let out = tietze_simplify(&g, 1);
        assert_eq!(out.moves, 1);
        assert!(!out.exhausted_moves);
        assert_eq!(out.group.rank(), 2);
    }
}
