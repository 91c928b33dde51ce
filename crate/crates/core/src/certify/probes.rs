//! Probes of open conjectures. Their violations are findings, never failures.

use crate::certify::certificate::{Certificate, Tolerances, Verdict};
use crate::certify::classical::probe_note;
use crate::certify::clique::clique_number;
use crate::certify::facts::Facts;
use crate::certify::theorems::plain;
use crate::cycles::has_cycle_of_length;
use crate::error::{Error, Result};
use crate::graph::{split_graph, Graph};
use crate::search::canon::are_isomorphic;

/// Proven for `r = 2`; open for `r >= 3`.
pub const BOLLOBAS_NIKIFOROV: &str = "bollobas_nikiforov";
pub const BOLLOBAS_NIKIFOROV_PROBE: &str = "conj_bollobas_nikiforov";
pub const ZLS_PROBE: &str = "conj_zls";

/// Claim id under which [`probe_bollobas_nikiforov`] reports for this `r`.
pub fn bollobas_nikiforov_id(r: usize) -> &'static str {
    if r == 2 {
        BOLLOBAS_NIKIFOROV
    } else {
        BOLLOBAS_NIKIFOROV_PROBE
    }
}

/// Whether a claim id names an open conjecture.
pub fn is_probe(claim_id: &str) -> bool {
    claim_id.starts_with("conj_")
}

/// `lambda_1^2 + lambda_2^2 <= (r-1)/r 2m` for `K_{r+1}`-free graphs on at
/// least `r + 1` vertices.
pub fn probe_bollobas_nikiforov(g: &Graph, r: usize, tol: &Tolerances) -> Result<Certificate> {
    if r < 2 {
        return Err(Error::domain(format!("r must be at least 2, got {r}")));
    }
    let f = Facts::new(g, tol)?;
    let id = bollobas_nikiforov_id(r);
    let formula = "lambda1^2 + lambda2^2 <= (r-1)/r 2m";
    let inputs = f.inputs.clone().r(r);
    if f.n < r + 1 {
        return Ok(Certificate::not_applicable(id, formula, inputs, format!("order below r+1 = {}", r + 1)));
    }
    let omega = clique_number(g)?;
    if omega > r {
        return Ok(Certificate::not_applicable(id, formula, inputs, format!("contains K_{}", r + 1)));
    }
    let lhs = f.lambda(0)?.powi(2) + f.lambda(1)?.powi(2);
    let rhs = (r - 1) as f64 / r as f64 * 2.0 * f.m as f64;
    let mut c = plain(id, formula, inputs, lhs, rhs, tol);
    if is_probe(id) {
        c.structure_note = Some(probe_note(c.verdict));
    }
    Ok(c)
}

/// Spectral threshold `(k - 1 + sqrt(4m - k^2 + 1)) / 2`.
pub fn zls_threshold(m: usize, k: usize) -> f64 {
    let inner = 4.0 * m as f64 - (k * k) as f64 + 1.0;
    (k as f64 - 1.0 + inner.max(0.0).sqrt()) / 2.0
}

/// If `lambda_1 >= (k - 1 + sqrt(4m - k^2 + 1)) / 2` then the graph contains
/// `C_l` for every `3 <= l <= 2k + 2`, unless it is `S_{m/k + (k+1)/2, k}`.
///
/// `lhs = lambda_1`, `rhs` is the threshold. Below the threshold the
/// hypothesis fails and the verdict is `holds_strict`. Above it the verdict
/// is `holds_strict` when all cycles are present, `holds_equality` for the
/// exceptional split graph, and `violated` otherwise; the conjecture only
/// speaks about sufficiently large `m`, so small violations do not refute it.
pub fn probe_zls(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::domain(format!("the probe needs k >= 2, got {k}")));
    }
    let f = Facts::new(g, tol)?;
    let formula = "lambda1 >= (k-1+sqrt(4m-k^2+1))/2 implies C_l for all l <= 2k+2 unless S_{m/k+(k+1)/2,k}";
    let inputs = f.inputs.clone().k(k);
    if !g.isolated_vertices().is_empty() {
        return Ok(Certificate::not_applicable(ZLS_PROBE, formula, inputs, "graph has isolated vertices"));
    }
    let lambda1 = f.lambda(0)?;
    let threshold = zls_threshold(f.m, k);
    let met = lambda1 >= threshold || tol.near(lambda1, threshold);
    let (verdict, note) = if !met {
        (Verdict::HoldsStrict, "hypothesis not met".to_string())
    } else {
        let missing: Vec<usize> = (3..=2 * k + 2).filter(|&l| !has_cycle_of_length(g, l)).collect();
        // S_{n,k} has m = k(k-1)/2 + k(n-k), i.e. n = m/k + (k+1)/2
        let twice = 2 * f.m + k * (k + 1);
        let exception = if twice % (2 * k) == 0 {
            let order = twice / (2 * k);
            order >= k && order == f.n && are_isomorphic(g, &split_graph(order, k)?)?
        } else {
            false
        };
        if missing.is_empty() {
            (Verdict::HoldsStrict, "hypothesis met; every required cycle is present".to_string())
        } else if exception {
            (Verdict::HoldsEquality, format!("hypothesis met by the exceptional graph S_{{{},{k}}}", f.n))
        } else {
            (
                Verdict::Violated,
                format!(
                    "hypothesis met but no cycle of length {missing:?}; non-refuting, the conjecture concerns sufficiently large m (m = {})",
                    f.m
                ),
            )
        }
    };
    Ok(Certificate::evaluated(ZLS_PROBE, formula, inputs, lambda1, threshold, verdict, Some(note)))
}
