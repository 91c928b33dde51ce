//! Exhaustive scans over all isomorphism classes of a given order.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::certify::certificate::round_opt;
use crate::certify::{
    certify_claim, certify_sum_of_powers, check_claim, extremal_sides, is_probe, recognize_blowup_base, ClaimParams,
    Tolerances, Verdict,
};
use crate::cycles::{is_forbidden_free, odd_girth};
use crate::error::{Error, Result};
use crate::graph::{rk_bipartite, Graph};
use crate::graph6::to_graph6;
use crate::search::canon::canonical_form;
use crate::search::enumerate::{enumerate_fold, max_order, Filter};
use crate::spectral::{rk_spectral_radius, spectrum};

/// Largest order for the extremal search.
pub const EXTREMAL_MAX_N: usize = 10;
/// Largest order for the census and claim scans.
pub const SCAN_MAX_N: usize = 9;
/// Near-ties for the largest `lambda_1` are collected inside this band.
pub const EXTREMAL_BAND: f64 = 1e-7;
/// Required agreement between the best `lambda_1` and the quotient root.
pub const ROOT_AGREEMENT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub workers: usize,
    /// Enumeration cap; defaults to `SPECTRAL_LAB_MAX_N` or 10.
    pub cap: usize,
    pub tol: Tolerances,
    /// Record wall-clock time in the report (makes output non-reproducible).
    pub timing: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            cap: max_order(),
            tol: Tolerances::default(),
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    /// `extremal`, `census` or `scan`.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim_id: Option<String>,
    /// The scanned claim is an open conjecture.
    pub probe: bool,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    /// Which classes were generated: `all` or `odd_girth>=2k+3_or_bipartite`.
    pub universe: String,
    /// Number of isomorphism classes generated.
    pub total_canonical: usize,
    /// Number of classes on which the claim applies.
    pub admissible: usize,
    #[serde(serialize_with = "round_opt")]
    pub extremal_value: Option<f64>,
    #[serde(serialize_with = "round_opt", skip_serializing_if = "Option::is_none")]
    pub expected_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_graph: Option<String>,
    pub extremal_graphs: Vec<String>,
    pub equality_graphs: Vec<String>,
    /// Census only: classes recognized as blow-ups of one of the four bases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recognized_graphs: Option<Vec<String>>,
    pub counterexamples: Vec<String>,
    /// Classes where a probe of an open conjecture reported `violated`.
    /// These never count against `confirmed`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub probe_findings: Vec<String>,
    /// Whether the scan confirms the claim on the whole universe.
    pub confirmed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl SearchReport {
    fn new(mode: &str, n: usize, k: usize, universe: &str) -> Self {
        SearchReport {
            mode: mode.to_string(),
            claim_id: None,
            probe: false,
            n,
            k,
            r: None,
            universe: universe.to_string(),
            total_canonical: 0,
            admissible: 0,
            extremal_value: None,
            expected_value: None,
            expected_graph: None,
            extremal_graphs: Vec::new(),
            equality_graphs: Vec::new(),
            recognized_graphs: None,
            counterexamples: Vec::new(),
            probe_findings: Vec::new(),
            confirmed: false,
            runtime_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Every graph listed anywhere in the report, for a graph6 sidecar.
    pub fn listed_graphs(&self) -> Vec<String> {
        let mut all: BTreeSet<String> = BTreeSet::new();
        all.extend(self.extremal_graphs.iter().cloned());
        all.extend(self.equality_graphs.iter().cloned());
        if let Some(r) = &self.recognized_graphs {
            all.extend(r.iter().cloned());
        }
        all.extend(self.counterexamples.iter().cloned());
        all.extend(self.probe_findings.iter().cloned());
        all.into_iter().collect()
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v.dedup();
    v
}

fn check_order(n: usize, limit: usize, cap: usize) -> Result<()> {
    if n > limit {
        return Err(Error::precondition(format!("order {n} exceeds the limit {limit} of this scan")));
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

fn finish(mut report: SearchReport, start: Instant, opts: &SearchOptions) -> SearchReport {
    if opts.timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

#[derive(Default)]
struct ExtremalShard {
    total: usize,
    admissible: usize,
    best: f64,
    near: Vec<(f64, String)>,
    err: Option<Error>,
}

/// Scans the non-bipartite `{C_3, ..., C_{2k+1}}`-free classes on `n`
/// vertices for the largest spectral radius and compares the maximizers with
/// `R_k(K_{floor((n-2k+1)/2), ceil((n-2k+1)/2)})`.
///
/// The generation tree is pruned by the hereditary odd-girth condition, so
/// `total_canonical` counts the forbidden-free classes (bipartite included).
pub fn extremal_radius_search(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if n < 2 * k + 4 {
        return Err(Error::precondition(format!("order {n} is below 2k+4 = {}", 2 * k + 4)));
    }
    check_order(n, EXTREMAL_MAX_N, opts.cap)?;
    let filter = Filter::forbidden_free(k);
    let shards = enumerate_fold(n, &filter, opts.workers, opts.cap, ExtremalShard::default, |acc, g| {
        acc.total += 1;
        if acc.err.is_some() || odd_girth(&g).is_bipartite() {
            return;
        }
        acc.admissible += 1;
        let lambda1 = match spectrum(&g, opts.tol.zero) {
            Ok(s) => s.lambda1(),
            Err(e) => {
                acc.err = Some(e);
                return;
            }
        };
        if acc.near.is_empty() || lambda1 > acc.best {
            acc.best = lambda1;
        }
        if lambda1 >= acc.best - EXTREMAL_BAND {
            match to_graph6(&g) {
                Ok(code) => acc.near.push((lambda1, code)),
                Err(e) => acc.err = Some(e),
            }
            let best = acc.best;
            acc.near.retain(|(v, _)| *v >= best - EXTREMAL_BAND);
        }
    })?;

    let mut report = SearchReport::new("extremal", n, k, &format!("odd_girth>={}_or_bipartite", 2 * k + 3));
    let mut best: Option<f64> = None;
    for s in &shards {
        if let Some(e) = &s.err {
            return Err(e.clone());
        }
        report.total_canonical += s.total;
        report.admissible += s.admissible;
        if !s.near.is_empty() {
            best = Some(best.map_or(s.best, |b: f64| b.max(s.best)));
        }
    }
    let (a, b) = extremal_sides(n, k)?;
    let expected = canonical_form(&rk_bipartite(k, a, b)?)?;
    let expected_value = rk_spectral_radius(k, a, b)?;
    if let Some(best) = best {
        let mut graphs = Vec::new();
        for s in &shards {
            for (v, code) in &s.near {
                if *v >= best - EXTREMAL_BAND {
                    graphs.push(canonical_form(&crate::graph6::from_graph6(code)?)?);
                }
            }
        }
        report.extremal_graphs = sorted(graphs);
        report.extremal_value = Some(best);
    }
    report.counterexamples = report
        .extremal_graphs
        .iter()
        .filter(|g| **g != expected)
        .cloned()
        .collect();
    report.confirmed = report.extremal_graphs == [expected.clone()]
        && report
            .extremal_value
            .is_some_and(|v| (v - expected_value).abs() <= ROOT_AGREEMENT);
    report.expected_graph = Some(expected);
    report.expected_value = Some(expected_value);
    Ok(finish(report, start, opts))
}

#[derive(Default)]
struct CensusShard {
    total: usize,
    admissible: usize,
    equality: Vec<String>,
    recognized: Vec<String>,
    violations: Vec<String>,
    err: Option<Error>,
}

impl CensusShard {
    fn visit(&mut self, g: &Graph, k: usize, tol: &Tolerances) -> Result<()> {
        self.total += 1;
        if !is_forbidden_free(g, k) {
            return Ok(());
        }
        self.admissible += 1;
        let code = to_graph6(g)?;
        let cert = certify_sum_of_powers(g, k, tol)?;
        if let (Some(l), Some(r)) = (cert.lhs, cert.rhs) {
            if tol.near(l, r) {
                self.equality.push(code.clone());
            }
        }
        if recognize_blowup_base(g)?.is_base() {
            self.recognized.push(code.clone());
        }
        if cert.verdict == Verdict::Violated {
            self.violations.push(code);
        }
        Ok(())
    }
}

/// Compares, over all `{C_3, ..., C_{2k+1}}`-free classes on `n` vertices,
/// the numeric equality cases of `lambda_1^{2k} + lambda_2^{2k} <= Tr(A^{2k})/2`
/// with the blow-ups of the four bases.
pub fn equality_census(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if n < 2 * k + 1 {
        return Err(Error::precondition(format!("order {n} is below 2k+1 = {}", 2 * k + 1)));
    }
    check_order(n, SCAN_MAX_N, opts.cap)?;
    let shards = enumerate_fold(n, &Filter::all(), opts.workers, opts.cap, CensusShard::default, |acc, g| {
        if acc.err.is_none() {
            if let Err(e) = acc.visit(&g, k, &opts.tol) {
                acc.err = Some(e);
            }
        }
    })?;
    let mut report = SearchReport::new("census", n, k, "all");
    report.claim_id = Some(crate::certify::theorems::SUM_OF_POWERS.to_string());
    let (mut eq, mut rec, mut bad) = (Vec::new(), Vec::new(), Vec::new());
    for s in shards {
        if let Some(e) = s.err {
            return Err(e);
        }
        report.total_canonical += s.total;
        report.admissible += s.admissible;
        eq.extend(s.equality);
        rec.extend(s.recognized);
        bad.extend(s.violations);
    }
    report.equality_graphs = sorted(eq);
    let rec = sorted(rec);
    report.counterexamples = sorted(bad);
    report.confirmed = report.counterexamples.is_empty() && report.equality_graphs == rec;
    report.recognized_graphs = Some(rec);
    Ok(finish(report, start, opts))
}

#[derive(Default)]
struct ScanShard {
    total: usize,
    admissible: usize,
    equality: Vec<String>,
    violations: Vec<String>,
    findings: Vec<String>,
    err: Option<Error>,
}

/// Runs the certifier registered under `claim` on every class of order `n`.
pub fn counterexample_scan(n: usize, claim: &str, params: ClaimParams, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    check_claim(claim)?;
    check_order(n, SCAN_MAX_N, opts.cap)?;
    let shards = enumerate_fold(n, &Filter::all(), opts.workers, opts.cap, ScanShard::default, |acc, g| {
        acc.total += 1;
        if acc.err.is_some() {
            return;
        }
        let certs = match certify_claim(&g, claim, params, &opts.tol) {
            Ok(c) => c,
            Err(e) => {
                acc.err = Some(e);
                return;
            }
        };
        if certs.iter().any(|c| c.applicable) {
            acc.admissible += 1;
        }
        let violated = |probe: bool| {
            certs
                .iter()
                .any(|c| c.verdict == Verdict::Violated && is_probe(&c.claim_id) == probe)
        };
        let slot = if violated(false) {
            Some(&mut acc.violations)
        } else if certs.iter().any(|c| c.verdict == Verdict::HoldsEquality) {
            Some(&mut acc.equality)
        } else {
            None
        };
        let finding = violated(true);
        if slot.is_none() && !finding {
            return;
        }
        match to_graph6(&g) {
            Ok(code) => {
                if finding {
                    acc.findings.push(code.clone());
                }
                if let Some(v) = slot {
                    v.push(code);
                }
            }
            Err(e) => acc.err = Some(e),
        }
    })?;
    let mut report = SearchReport::new("scan", n, params.k, "all");
    report.claim_id = Some(claim.to_string());
    report.probe = is_probe(claim);
    report.r = params.r;
    let (mut eq, mut bad, mut found) = (Vec::new(), Vec::new(), Vec::new());
    for s in shards {
        if let Some(e) = s.err {
            return Err(e);
        }
        report.total_canonical += s.total;
        report.admissible += s.admissible;
        eq.extend(s.equality);
        bad.extend(s.violations);
        found.extend(s.findings);
    }
    report.equality_graphs = sorted(eq);
    report.counterexamples = sorted(bad);
    report.probe_findings = sorted(found);
    report.confirmed = report.counterexamples.is_empty();
    Ok(finish(report, start, opts))
}
