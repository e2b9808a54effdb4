//! Pieces of the fiber-sum construction and their characteristic numbers.

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Torus area, either fixed or equal to the strand count (the braid graph
/// covers the base `d` times).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Volume {
    Fixed(f64),
    Symbolic(VolumeSymbol),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VolumeSymbol {
    #[serde(rename = "d")]
    Strands,
}

impl Volume {
    pub fn resolve(&self, strands: usize) -> f64 {
        match self {
            Volume::Fixed(v) => *v,
            Volume::Symbolic(VolumeSymbol::Strands) => strands as f64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusSpec {
    pub name: String,
    pub volume: Volume,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GluingPiece {
    pub name: String,
    pub euler_characteristic: i64,
    pub signature: i64,
    pub tori: Vec<TorusSpec>,
}

impl GluingPiece {
    /// Invariants of a closed oriented 4-manifold from `b₁`, `b₂`, `b₂⁺`:
    /// `χ = 2 - 2b₁ + b₂`, `σ = 2b₂⁺ - b₂`.
    pub fn from_betti(name: &str, b1: i64, b2: i64, b2_plus: i64, tori: Vec<TorusSpec>) -> Self {
        GluingPiece {
            name: name.to_string(),
            euler_characteristic: 2 - 2 * b1 + b2,
            signature: 2 * b2_plus - b2,
            tori,
        }
    }
}

fn torus(name: &str, volume: Volume) -> TorusSpec {
    TorusSpec {
        name: name.to_string(),
        volume,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumConfiguration {
    pub pieces: Vec<GluingPiece>,
    pub pairings: Vec<(String, String)>,
}

impl Default for SumConfiguration {
    fn default() -> Self {
        Self::standard()
    }
}

impl SumConfiguration {
    /// `M₁(β) ≅ T² × S²` carrying the braid graph `H₁`; `T⁴` with three
    /// coordinate tori; two elliptic K3 surfaces with fibres `H₃`, `H₄`.
    pub fn standard() -> Self {
        let d = || Volume::Symbolic(VolumeSymbol::Strands);
        let one = || Volume::Fixed(1.0);
        SumConfiguration {
            pieces: vec![
                GluingPiece::from_betti("M1", 2, 2, 1, vec![torus("H1", d())]),
                GluingPiece::from_betti(
                    "T4",
                    4,
                    6,
                    3,
                    vec![torus("H1'", d()), torus("H3'", one()), torus("H4'", one())],
                ),
                GluingPiece::from_betti("K3a", 0, 22, 3, vec![torus("H3", one())]),
                GluingPiece::from_betti("K3b", 0, 22, 3, vec![torus("H4", one())]),
            ],
            pairings: vec![
                ("H1".into(), "H1'".into()),
                ("H3".into(), "H3'".into()),
                ("H4".into(), "H4'".into()),
            ],
        }
    }

    /// Every torus in exactly one pairing, paired volumes equal.
    pub fn validate(&self, strands: usize) -> Result<(), ConfigError> {
        let tori: Vec<&TorusSpec> = self.pieces.iter().flat_map(|p| &p.tori).collect();
        let find = |name: &str| {
            tori.iter()
                .find(|t| t.name == name)
                .copied()
                .ok_or_else(|| ConfigError::UnknownTorus(name.to_string()))
        };
        let mut used: Vec<&str> = Vec::new();
        for (left, right) in &self.pairings {
            if left == right {
                return Err(ConfigError::SelfPairing(left.clone()));
            }
            let (l, r) = (find(left)?, find(right)?);
            for name in [left.as_str(), right.as_str()] {
                if used.contains(&name) {
                    return Err(ConfigError::TorusReused(name.to_string()));
                }
                used.push(name);
            }
            let (lv, rv) = (l.volume.resolve(strands), r.volume.resolve(strands));
            if (lv - rv).abs() > 1e-12 * lv.abs().max(rv.abs()).max(1.0) {
                return Err(ConfigError::VolumeMismatch {
                    left: left.clone(),
                    right: right.clone(),
                    left_volume: lv,
                    right_volume: rv,
                });
            }
        }
        if let Some(t) = tori.iter().find(|t| !used.contains(&t.name.as_str())) {
            return Err(ConfigError::UnpairedTorus(t.name.clone()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharacteristicNumbers {
    pub chi: i64,
    pub sigma: i64,
    pub c2: i64,
    pub c1_squared: i64,
}

impl CharacteristicNumbers {
    pub fn from_chi_sigma(chi: i64, sigma: i64) -> Self {
        CharacteristicNumbers {
            chi,
            sigma,
            c2: chi,
            c1_squared: 2 * chi + 3 * sigma,
        }
    }
}

/// `χ` and `σ` add under fiber sum along tori; `c₂ = χ`, `c₁² = 2χ + 3σ`.
pub fn characteristic_numbers(
    cfg: &SumConfiguration,
    strands: usize,
) -> Result<CharacteristicNumbers, ConfigError> {
    cfg.validate(strands)?;
    let chi = cfg.pieces.iter().map(|p| p.euler_characteristic).sum();
    let sigma = cfg.pieces.iter().map(|p| p.signature).sum();
    Ok(CharacteristicNumbers::from_chi_sigma(chi, sigma))
}

/// Tori representing `-d · c₁(M^β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ToriCount {
    pub total: u64,
    pub h1_copies: u64,
    pub h3_copies: u64,
    pub h4_copies: u64,
}

pub fn anticanonical_tori_count(strands: usize) -> Result<ToriCount, ConfigError> {
    if strands < 2 {
        return Err(ConfigError::TooFewStrands(strands));
    }
    let d = strands as u64;
    Ok(ToriCount {
        total: 6 * d - 2,
        h1_copies: 2 * d - 2,
        h3_copies: 2 * d,
        h4_copies: 2 * d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_piece_invariants() {
        let cfg = SumConfiguration::standard();
        let table: Vec<(i64, i64)> = cfg
            .pieces
            .iter()
            .map(|p| (p.euler_characteristic, p.signature))
            .collect();
        assert_eq!(table, vec![(0, 0), (0, 0), (24, -16), (24, -16)]);
    }

    #[test]
    fn standard_configuration_numbers() {
        let n = characteristic_numbers(&SumConfiguration::standard(), 3).unwrap();
        assert_eq!(
            n,
            CharacteristicNumbers {
                chi: 48,
                sigma: -32,
                c2: 48,
                c1_squared: 0
            }
        );
    }

    #[test]
    fn flat_configuration() {
        let cfg = SumConfiguration {
            pieces: vec![
                GluingPiece::from_betti(
                    "M1",
                    2,
                    2,
                    1,
                    vec![torus("H1", Volume::Symbolic(VolumeSymbol::Strands))],
                ),
                GluingPiece::from_betti("T4", 4, 6, 3, vec![torus("H1'", Volume::Fixed(2.0))]),
            ],
            pairings: vec![("H1".into(), "H1'".into())],
        };
        let n = characteristic_numbers(&cfg, 2).unwrap();
        assert_eq!((n.chi, n.sigma), (0, 0));
        assert!(matches!(
            characteristic_numbers(&cfg, 3),
            Err(ConfigError::VolumeMismatch { .. })
        ));
    }

    #[test]
    fn single_k3_identity() {
        let k3 = GluingPiece::from_betti("K3", 0, 22, 3, vec![]);
        let n = CharacteristicNumbers::from_chi_sigma(k3.euler_characteristic, k3.signature);
        assert_eq!(
            n,
            CharacteristicNumbers {
                chi: 24,
                sigma: -16,
                c2: 24,
                c1_squared: 0
            }
        );
    }

    #[test]
    fn configuration_errors() {
        let mut cfg = SumConfiguration::standard();
        cfg.pairings.pop();
        assert_eq!(
            characteristic_numbers(&cfg, 2),
            Err(ConfigError::UnpairedTorus("H4'".into()))
        );
        let mut cfg = SumConfiguration::standard();
        cfg.pairings.push(("H1".into(), "H3".into()));
        assert_eq!(
            characteristic_numbers(&cfg, 2),
            Err(ConfigError::TorusReused("H1".into()))
        );
        let mut cfg = SumConfiguration::standard();
        cfg.pairings[0].1 = "H9".into();
        assert_eq!(
            characteristic_numbers(&cfg, 2),
            Err(ConfigError::UnknownTorus("H9".into()))
        );
    }

    #[test]
    fn tori_counts() {
        let c = anticanonical_tori_count(2).unwrap();
        assert_eq!(
            (c.total, c.h1_copies, c.h3_copies, c.h4_copies),
            (10, 2, 4, 4)
        );
        let c = anticanonical_tori_count(3).unwrap();
        assert_eq!(
            (c.total, c.h1_copies, c.h3_copies, c.h4_copies),
            (16, 4, 6, 6)
        );
        assert_eq!(anticanonical_tori_count(5).unwrap().total, 28);
        assert!(anticanonical_tori_count(1).is_err());
    }
}
