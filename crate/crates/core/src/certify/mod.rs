//! Per-graph certificates for the main theorems, their corollaries, the
//! classical bounds they refine, and probes of related conjectures.

pub mod blowup;
pub mod certificate;
pub mod classical;
pub mod clique;
mod facts;
pub mod probes;
pub mod theorems;

pub use blowup::{recognize_blowup_base, BlowupBase, BlowupKind};
pub use certificate::{round12, Certificate, Inputs, Tolerances, Verdict, DEFAULT_EQUALITY_TOL};
pub use classical::{certify_classical, classical_bounds_report};
pub use clique::clique_number;
pub use probes::{is_probe, probe_bollobas_nikiforov, probe_zls};
pub use theorems::{
    certify_blowup_corollary, certify_edge_bound, certify_edge_radius_corollary, certify_extremal_radius,
    certify_max_degree_corollary, certify_nonbipartite_power, certify_sum_of_powers, extremal_sides,
    verify_gap_inequality, verify_radius_monotonicity, verify_walk_identity, GapCheck, RadiusMonotonicity,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Every claim id accepted by [`certify_claim`].
pub const CLAIM_IDS: &[&str] = &[
    theorems::SUM_OF_POWERS,
    theorems::BLOWUP_COROLLARY,
    theorems::NONBIPARTITE_POWER,
    theorems::EDGE_BOUND,
    theorems::EXTREMAL_RADIUS,
    theorems::EDGE_RADIUS_COROLLARY,
    theorems::MAX_DEGREE_COROLLARY,
    classical::STANLEY,
    classical::WU_ELPHICK,
    classical::HONG,
    classical::NIKIFOROV_DELTA,
    classical::WILF,
    classical::SPECTRAL_TURAN,
    classical::CHEN_QIAN,
    classical::NOSAL,
    classical::ELPHICK_PROBE,
    probes::BOLLOBAS_NIKIFOROV,
    probes::BOLLOBAS_NIKIFOROV_PROBE,
    probes::ZLS_PROBE,
    "all-classical",
];

/// Parameters a claim may need besides the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimParams {
    pub k: usize,
    /// Clique order bound for the Bollobás–Nikiforov inequality; defaults to
    /// 2 for the proven case and 3 for the probe.
    pub r: Option<usize>,
}

impl ClaimParams {
    pub fn k(k: usize) -> Self {
        ClaimParams { k, r: None }
    }
}

/// Checks that `claim` is registered.
pub fn check_claim(claim: &str) -> Result<()> {
    if CLAIM_IDS.contains(&claim) {
        Ok(())
    } else {
        Err(Error::UnknownClaim(claim.to_string()))
    }
}

/// Runs the certifier registered under `claim` on `g`.
pub fn certify_claim(g: &Graph, claim: &str, params: ClaimParams, tol: &Tolerances) -> Result<Vec<Certificate>> {
    let k = params.k;
    let one = |c: Result<Certificate>| c.map(|c| vec![c]);
    match claim {
        theorems::SUM_OF_POWERS => one(certify_sum_of_powers(g, k, tol)),
        theorems::BLOWUP_COROLLARY => one(certify_blowup_corollary(g, k, tol)),
        theorems::NONBIPARTITE_POWER => one(certify_nonbipartite_power(g, k, tol)),
        theorems::EDGE_BOUND => one(certify_edge_bound(g, k, tol)),
        theorems::EXTREMAL_RADIUS => one(certify_extremal_radius(g, k, tol)),
        theorems::EDGE_RADIUS_COROLLARY => one(certify_edge_radius_corollary(g, k, tol)),
        theorems::MAX_DEGREE_COROLLARY => one(certify_max_degree_corollary(g, k, tol)),
        probes::BOLLOBAS_NIKIFOROV => one(probe_bollobas_nikiforov(g, params.r.unwrap_or(2), tol)),
        probes::BOLLOBAS_NIKIFOROV_PROBE => {
            let r = params.r.unwrap_or(3);
            if r < 3 {
                return Err(Error::domain("the open case of the conjecture needs r >= 3"));
            }
            one(probe_bollobas_nikiforov(g, r, tol))
        }
        probes::ZLS_PROBE => one(probe_zls(g, k, tol)),
        "all-classical" => classical_bounds_report(g, tol),
        other => certify_classical(g, other, tol),
    }
}
