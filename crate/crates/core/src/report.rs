//! The full pipeline for one braid, as a serializable report.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::braid::{BraidWord, Permutation, Transitivity, TransitivityMode};
use crate::error::ConfigError;
use crate::floer::{
    hf_beta_bound, predict_mbeta, FloerDims, MBetaPrediction, MONOTONE_STATEMENT, SYMBOLS,
    SYMPLECTIC_CLASS_CAVEAT,
};
use crate::four_manifold::{
    anticanonical_tori_count, assemble_pi1_with, characteristic_numbers, check_abelianization,
    tietze_simplify, CharacteristicNumbers, Pi1Abelianization, PresentedGroup, SumConfiguration,
    ToriCount, DEFAULT_EFFORT,
};
use crate::free_group::artin_endo;
use crate::nielsen::{lefschetz_number, refine_classes, reidemeister_trace, GroupStructure};

pub const TOOL: &str = "braidfloer";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Framing twists act trivially on `π₁`, so no output here can see them.
pub const FRAMING_NOTE: &str = "not detected at this level";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportConfig {
    /// Conjugator length cap for twisted-conjugacy merging; 0 disables it.
    pub refine_depth: usize,
    pub transitivity: TransitivityMode,
    pub tietze_budget: usize,
    pub pieces: SumConfiguration,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            refine_depth: 0,
            transitivity: TransitivityMode::Strict,
            tietze_budget: DEFAULT_EFFORT,
            pieces: SumConfiguration::standard(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    #[serde(serialize_with = "crate::bigint_serde::vec")]
    pub class: Vec<BigInt>,
    /// Order of the class in `coker(I - A)`; `null` when infinite.
    #[serde(serialize_with = "crate::bigint_serde::option")]
    pub order: Option<BigInt>,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub index: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinedEntry {
    pub representative: String,
    #[serde(serialize_with = "crate::bigint_serde::vec")]
    pub class: Vec<BigInt>,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub index: BigInt,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementSection {
    pub depth: usize,
    /// Unmerged classes are not proven distinct.
    pub certified: bool,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub sum_abs: BigInt,
    pub classes: Vec<RefinedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NielsenSection {
    pub class_group: GroupStructure,
    pub classes: Vec<ClassEntry>,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub bound: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refinement: Option<RefinementSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfSection {
    #[serde(rename = "hf_lower_bound", serialize_with = "crate::bigint_serde::int")]
    pub lower_bound: BigInt,
    pub parity: u8,
    pub graded_bound: FloerDims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolEntry {
    pub symbol: &'static str,
    pub meaning: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MBetaSection {
    #[serde(flatten)]
    pub prediction: MBetaPrediction,
    pub symbols: Vec<SymbolEntry>,
    pub caveat: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplificationSummary {
    pub status: &'static str,
    pub moves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Section {
    pub raw: PresentedGroup,
    pub simplified: PresentedGroup,
    pub simplification: SimplificationSummary,
    pub abelianization: Pi1Abelianization,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub braid: BraidWord,
    pub strands: usize,
    pub permutation: Permutation,
    pub permutation_cycles: String,
    pub transitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relabeling: Option<Permutation>,
    #[serde(serialize_with = "crate::bigint_serde::int")]
    pub lefschetz: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nielsen: Option<NielsenSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hf_beta: Option<HfSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_beta: Option<MBetaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi1: Option<Pi1Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic_numbers: Option<CharacteristicNumbers>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anticanonical_tori: Option<ToriCount>,
    pub framing: &'static str,
    pub statements: Vec<&'static str>,
    pub warnings: Vec<String>,
    pub config: ReportConfig,
}

/// Runs every stage on one braid. Only configuration problems are errors;
/// a non-transitive braid yields a partial report with a warning.
pub fn build_report(
    input: &str,
    braid: &BraidWord,
    config: &ReportConfig,
) -> Result<ReportEnvelope, ConfigError> {
    let d = braid.strands();
    let endo = artin_endo(braid);
    let permutation = braid.induced_permutation();
    let transitivity = braid.transitivity(config.transitivity);
    let mut report = ReportEnvelope {
        tool: TOOL,
        version: VERSION,
        input: input.trim().to_string(),
        braid: braid.clone(),
        strands: d,
        permutation_cycles: permutation.cycle_notation(),
        permutation,
        transitive: transitivity.is_transitive(),
        relabeling: match &transitivity {
            Transitivity::Relabeled(r) => Some(r.clone()),
            _ => None,
        },
        lefschetz: lefschetz_number(&endo),
        nielsen: None,
        hf_beta: None,
        m_beta: None,
        pi1: None,
        characteristic_numbers: None,
        anticanonical_tori: None,
        framing: FRAMING_NOTE,
        statements: vec![MONOTONE_STATEMENT],
        warnings: Vec::new(),
        config: config.clone(),
    };
    if !report.transitive {
        report.warnings.push(format!(
            "braid not transitive: induced permutation {} is not (1 2 ... {d}); \
             Floer and surgery sections omitted",
            report.permutation_cycles
        ));
        return Ok(report);
    }
    if report.relabeling.is_some() {
        report
            .warnings
            .push("induced permutation is a d-cycle other than (1 2 ... d); relabeled".into());
    }

    let nd = reidemeister_trace(&endo);
    let refinement = (config.refine_depth > 0).then(|| {
        let r = refine_classes(&endo, config.refine_depth);
        RefinementSection {
            depth: r.depth,
            certified: false,
            sum_abs: r.sum_abs(),
            classes: r
                .classes
                .into_iter()
                .map(|c| RefinedEntry {
                    representative: c.representative.to_string(),
                    class: c.homology_class,
                    index: c.index,
                    terms: c.terms,
                })
                .collect(),
        }
    });
    report.nielsen = Some(NielsenSection {
        class_group: nd.class_space().into(),
        classes: nd
            .indices()
            .iter()
            .map(|(label, index)| ClassEntry {
                class: label.clone(),
                order: nd.class_space().element_order(label),
                index: index.clone(),
            })
            .collect(),
        bound: nd.bound(),
        refinement,
    });

    let bound = hf_beta_bound(&nd);
    report.hf_beta = Some(HfSection {
        lower_bound: bound.lower_bound,
        parity: bound.parity,
        graded_bound: FloerDims::bounded_by(&nd),
    });
    let prediction = predict_mbeta(braid, &nd, config.transitivity).expect("transitive");
    report.m_beta = Some(MBetaSection {
        prediction,
        symbols: SYMBOLS
            .iter()
            .map(|&(symbol, meaning)| SymbolEntry { symbol, meaning })
            .collect(),
        caveat: SYMPLECTIC_CLASS_CAVEAT,
    });

    let raw = assemble_pi1_with(braid, config.transitivity).expect("transitive");
    let simplified = tietze_simplify(&raw, config.tietze_budget);
    let abelianization = check_abelianization(&raw, d);
    if !abelianization.matches_target {
        report
            .warnings
            .push("abelianization of the assembled presentation is not Z + Z/d".into());
    }
    report.pi1 = Some(Pi1Section {
        simplification: SimplificationSummary {
            status: simplified.status(),
            moves: simplified.moves,
        },
        simplified: simplified.group,
        raw,
        abelianization,
    });
    report.characteristic_numbers = Some(characteristic_numbers(&config.pieces, d)?);
    report.anticanonical_tori = Some(anticanonical_tori_count(d)?);
    Ok(report)
}

/// Human-readable rendering, one trailing newline.
pub fn render_text(r: &ReportEnvelope) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "braid:        {}", r.braid);
    let _ = writeln!(out, "permutation:  {}", r.permutation_cycles);
    let _ = writeln!(out, "transitive:   {}", r.transitive);
    if let Some(rel) = &r.relabeling {
        let _ = writeln!(out, "relabeling:   {:?}", rel.images());
    }
    let _ = writeln!(out, "lefschetz:    {}", r.lefschetz);
    for w in &r.warnings {
        let _ = writeln!(out, "warning:      {w}");
    }
    if let Some(n) = &r.nielsen {
        let _ = writeln!(out, "class group:  {}", n.class_group.display);
        for c in &n.classes {
            let order = c
                .order
                .as_ref()
                .map_or("inf".to_string(), ToString::to_string);
            let coords: Vec<String> = c.class.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "  class ({}) order {order}: index {}",
                coords.join(", "),
                c.index
            );
        }
        let _ = writeln!(out, "nielsen bound: {}", n.bound);
        if let Some(refined) = &n.refinement {
            let _ = writeln!(
                out,
                "refined (depth {}, uncertified): {} classes, sum {}",
                refined.depth,
                refined.classes.len(),
                refined.sum_abs
            );
        }
    }
    if let Some(h) = &r.hf_beta {
        let _ = writeln!(
            out,
            "dim HF(beta) >= {} (parity {}); graded >= ({}, {})",
            h.lower_bound, h.parity, h.graded_bound.even, h.graded_bound.odd
        );
    }
    if let Some(m) = &r.m_beta {
        let p = &m.prediction;
        let _ = writeln!(
            out,
            "dim HF(phi_a1; [l2]) {} {}",
            p.l2_summand.relation(),
            p.l2_summand.value
        );
        let zero: Vec<&str> = p
            .vanishing_classes
            .iter()
            .map(|c| c.label.as_str())
            .collect();
        let _ = writeln!(out, "vanishing summands: [{}]", zero.join(", "));
        let _ = writeln!(
            out,
            "basis-free total {} {}",
            p.basis_free_total.relation(),
            p.basis_free_total.value
        );
    }
    if let Some(p) = &r.pi1 {
        let _ = writeln!(out, "pi1 raw:        {}", p.raw);
        let _ = writeln!(
            out,
            "pi1 simplified: {} [{}, {} moves]",
            p.simplified, p.simplification.status, p.simplification.moves
        );
        let _ = writeln!(
            out,
            "H1:             {} (target {})",
            p.abelianization.structure.display,
            if p.abelianization.matches_target {
                "ok"
            } else {
                "MISMATCH"
            }
        );
    }
    if let Some(c) = &r.characteristic_numbers {
        let _ = writeln!(
            out,
            "chi {} sigma {} c2 {} c1^2 {}",
            c.chi, c.sigma, c.c2, c.c1_squared
        );
    }
    if let Some(t) = &r.anticanonical_tori {
        let _ = writeln!(
            out,
            "anticanonical tori: {} = {} H1 + {} H3 + {} H4",
            t.total, t.h1_copies, t.h3_copies, t.h4_copies
        );
    }
    let _ = writeln!(out, "framing:      {}", r.framing);
    out
}
