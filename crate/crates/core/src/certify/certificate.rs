use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Default relative band inside which two sides count as numerically equal.
pub const DEFAULT_EQUALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    HoldsStrict,
    HoldsEquality,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsStrict => "holds_strict",
            Verdict::HoldsEquality => "holds_equality",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tolerances shared by all certifiers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative band for numeric equality, scaled by `max(1, |lhs|, |rhs|)`.
    pub equality: f64,
    /// Eigenvalues with `|x| <= zero` count as zero.
    pub zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            equality: DEFAULT_EQUALITY_TOL,
            zero: crate::spectral::DEFAULT_ZERO_TOL,
        }
    }
}

impl Tolerances {
    pub fn near(&self, lhs: f64, rhs: f64) -> bool {
        (lhs - rhs).abs() <= self.equality * lhs.abs().max(rhs.abs()).max(1.0)
    }
}

/// Parameters the certificate was computed for.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Inputs {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
}

impl Inputs {
    pub fn for_graph(g: &Graph) -> Result<Self> {
        Ok(Inputs {
            graph6: to_graph6(g)?,
            ..Inputs::default()
        })
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }
}

/// Outcome of checking one inequality on one input.
///
/// The inequality is always read as `lhs <= rhs` (or `lhs < rhs` for strict
/// claims), so `margin = rhs - lhs` is non-negative whenever it holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub claim_id: String,
    pub applicable: bool,
    /// Human-readable form of the inequality.
    pub formula: String,
    #[serde(serialize_with = "round_opt")]
    pub lhs: Option<f64>,
    #[serde(serialize_with = "round_opt")]
    pub rhs: Option<f64>,
    #[serde(serialize_with = "round_opt")]
    pub margin: Option<f64>,
    pub verdict: Verdict,
    pub structure_note: Option<String>,
    pub inputs: Inputs,
}

/// Rounds to 12 significant digits so printed values are stable across
/// platforms and runs.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub(crate) fn round_f64<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*v))
}

pub(crate) fn round_opt<S: Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) if x.is_finite() => s.serialize_f64(round12(*x)),
        _ => s.serialize_none(),
    }
}

impl Certificate {
    pub fn not_applicable(claim_id: &str, formula: &str, inputs: Inputs, why: impl Into<String>) -> Self {
        Certificate {
            claim_id: claim_id.to_string(),
            applicable: false,
            formula: formula.to_string(),
            lhs: None,
            rhs: None,
            margin: None,
            verdict: Verdict::NotApplicable,
            structure_note: Some(why.into()),
            inputs,
        }
    }

    pub(crate) fn evaluated(
        claim_id: &str,
        formula: &str,
        inputs: Inputs,
        lhs: f64,
        rhs: f64,
        verdict: Verdict,
        note: Option<String>,
    ) -> Self {
        Certificate {
            claim_id: claim_id.to_string(),
            applicable: true,
            formula: formula.to_string(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(rhs - lhs),
            verdict,
            structure_note: note,
            inputs,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }
}

/// Outcome of the structural half of an equality characterization.
pub(crate) struct Structure {
    pub matches: bool,
    pub note: String,
}

/// Two-phase verdict for `lhs <= rhs` whose equality case is structural:
/// numeric closeness only nominates a candidate, and `holds_equality` needs
/// the structure to agree. Numeric equality without the structure, or the
/// structure without numeric equality, contradicts the characterization.
pub(crate) fn structural_verdict(
    lhs: f64,
    rhs: f64,
    tol: &Tolerances,
    structure: Structure,
) -> (Verdict, String) {
    let near = tol.near(lhs, rhs);
    match (near, structure.matches) {
        (true, true) => (Verdict::HoldsEquality, structure.note),
        (true, false) => (
            Verdict::Violated,
            format!("numeric equality without the equality structure: {}", structure.note),
        ),
        (false, true) => (
            Verdict::Violated,
            format!("equality structure present but sides differ: {}", structure.note),
        ),
        (false, false) if lhs < rhs => (Verdict::HoldsStrict, structure.note),
        (false, false) => (Verdict::Violated, structure.note),
    }
}

/// Verdict for `lhs <= rhs` with no structural characterization available.
pub(crate) fn numeric_verdict(lhs: f64, rhs: f64, tol: &Tolerances) -> (Verdict, Option<String>) {
    if tol.near(lhs, rhs) {
        (
            Verdict::HoldsEquality,
            Some("numeric equality; no structural characterization is checked".to_string()),
        )
    } else if lhs < rhs {
        (Verdict::HoldsStrict, None)
    } else {
        (Verdict::Violated, None)
    }
}

/// Verdict for a strict inequality `lhs < rhs`; near-equality is a violation.
pub(crate) fn strict_verdict(lhs: f64, rhs: f64, tol: &Tolerances) -> (Verdict, Option<String>) {
    if tol.near(lhs, rhs) {
        (
            Verdict::Violated,
            Some("sides agree within tolerance but the bound is strict".to_string()),
        )
    } else if lhs < rhs {
        (Verdict::HoldsStrict, None)
    } else {
        (Verdict::Violated, None)
    }
}
