use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::matrix::IntMatrix;

/// `U · M · V = S` with `S` diagonal, `d_1 | d_2 | …`, and `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `S`, all nonnegative.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    'outer: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a.get(t, t).clone();
            let mut remainder_left = false;
            for i in t + 1..rows {
                let q = a.get(i, t).div_floor(&pivot);
                let neg = -q;
                a.add_row_multiple(i, t, &neg);
                u.add_row_multiple(i, t, &neg);
                remainder_left |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = a.get(t, j).div_floor(&pivot);
                let neg = -q;
                a.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
                remainder_left |= !a.get(t, j).is_zero();
            }
            if remainder_left {
                continue;
            }

            // Divisibility: fold an offending row into row t and go again.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { s: a, u, v }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                let unit = mag.is_one();
                best = Some(((i, j), mag));
                if unit {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Canonical coordinates of an element of a cokernel: one entry per
/// non-unit invariant factor, reduced into `[0, d)` for finite factors.
pub type ClassLabel = Vec<BigInt>;

/// The finitely generated abelian group `Z^r / Im(M)` together with the
/// change of basis that puts its elements into canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    /// Ambient invariant factors, length `r`; zero marks a free summand.
    factors: Vec<BigInt>,
    u: IntMatrix,
}

impl Cokernel {
    /// Cokernel of `M: Z^cols → Z^rows`.
    pub fn of(m: &IntMatrix) -> Cokernel {
        let snf = smith_normal_form(m);
        let mut factors = snf.diagonal();
        factors.resize(m.rows(), BigInt::zero());
        Cokernel { factors, u: snf.u }
    }

    pub fn ambient_dimension(&self) -> usize {
        self.factors.len()
    }

    /// Non-unit invariant factors in divisibility order, zeros (free summands) last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Torsion coefficients greater than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.iter().all(One::is_one)
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            None
        } else {
            Some(self.factors.iter().product())
        }
    }

    pub fn reduce(&self, v: &[BigInt]) -> ClassLabel {
        let w = self.u.apply(v);
        w.into_iter()
            .zip(&self.factors)
            .filter(|(_, d)| !d.is_one())
            .map(|(x, d)| if d.is_zero() { x } else { x.mod_floor(d) })
            .collect()
    }

    pub fn reduce_i64(&self, v: &[i64]) -> ClassLabel {
        let big: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        self.reduce(&big)
    }

    pub fn is_zero(&self, label: &ClassLabel) -> bool {
        label.iter().all(Zero::is_zero)
    }

    /// Order of an element given in canonical coordinates; `None` if infinite.
    pub fn element_order(&self, label: &ClassLabel) -> Option<BigInt> {
        let mut order = BigInt::one();
        for (x, d) in label.iter().zip(self.invariant_factors()) {
            if d.is_zero() {
                if !x.is_zero() {
                    return None;
                }
                continue;
            }
            let local = &d / x.gcd(&d);
            order = order.lcm(&local);
        }
        Some(order)
    }
}

impl fmt::Display for Cokernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let free = self.free_rank();
        match free {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion().iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Serialized form of a cokernel: its invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupStructure {
    pub free_rank: usize,
    #[serde(serialize_with = "crate::bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
    pub display: String,
}

impl From<&Cokernel> for GroupStructure {
    fn from(c: &Cokernel) -> Self {
        GroupStructure {
            free_rank: c.free_rank(),
            torsion: c.torsion(),
            display: c.to_string(),
        }
    }
}
