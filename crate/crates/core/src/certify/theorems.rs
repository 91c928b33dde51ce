//! Certificates for the main bounds on graphs without short odd cycles.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::certify::blowup::recognize_blowup_base;
use crate::certify::certificate::{
    numeric_verdict, round_f64, round_opt, strict_verdict, structural_verdict, Certificate, Structure, Tolerances, Verdict,
};
use crate::certify::facts::{big_to_f64, cos_term, Facts};
use crate::error::{Error, Result};
use crate::graph::{cycle, rk_bipartite, BaseGraph, Graph};
use crate::search::canon::are_isomorphic;
use crate::spectral::{rk_spectral_radius, spectrum, DEFAULT_ZERO_TOL};

pub const SUM_OF_POWERS: &str = "thm1.1";
pub const BLOWUP_COROLLARY: &str = "thm1.2";
pub const NONBIPARTITE_POWER: &str = "thm1.3";
pub const EDGE_BOUND: &str = "thm1.04";
pub const EXTREMAL_RADIUS: &str = "thm1.4";
pub const EDGE_RADIUS_COROLLARY: &str = "cor1.4";
pub const MAX_DEGREE_COROLLARY: &str = "cor001";

fn forbidden_note(k: usize) -> String {
    format!("contains an odd cycle of length at most {}", 2 * k + 1)
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(())
}

/// The two sides of `Tr(A^{2k}) / 2`, exactly and as a float.
fn half_trace(f: &Facts, k: usize) -> Result<f64> {
    let tr = f.trace(2 * k as u32)?;
    Ok(big_to_f64(&tr) / 2.0)
}

/// `lambda_1^{2k} + lambda_2^{2k} <= Tr(A^{2k}) / 2` for
/// `{C_3, ..., C_{2k+1}}`-free graphs on at least `2k + 1` vertices, with
/// equality exactly for blow-ups of the four bases.
pub fn certify_sum_of_powers(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "lambda1^(2k) + lambda2^(2k) <= Tr(A^(2k))/2";
    let inputs = f.inputs.clone().k(k);
    if f.n < 2 * k + 1 {
        return Ok(Certificate::not_applicable(
            SUM_OF_POWERS,
            formula,
            inputs,
            format!("order {} is below 2k+1 = {}", f.n, 2 * k + 1),
        ));
    }
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(SUM_OF_POWERS, formula, inputs, forbidden_note(k)));
    }
    let p = 2 * k as i32;
    let lhs = f.lambda(0)?.powi(p) + f.lambda(1)?.powi(p);
    let rhs = half_trace(&f, k)?;
    let blowup = recognize_blowup_base(g)?;
    let structure = Structure {
        matches: blowup.is_base(),
        note: format!(
            "blow-up base {} with class sizes {:?}, rank {}",
            blowup.base, blowup.class_sizes, blowup.rank
        ),
    };
    let (verdict, note) = structural_verdict(lhs, rhs, tol, structure);
    Ok(Certificate::evaluated(SUM_OF_POWERS, formula, inputs, lhs, rhs, verdict, Some(note)))
}

/// `lambda_1^{2k} <= Tr(A^{2k}) / 2` on `{C_3, ..., C_{2k+1}}`-free graphs,
/// with equality exactly for blow-ups of `P_2+K_1`.
pub fn certify_blowup_corollary(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "lambda1^(2k) <= Tr(A^(2k))/2";
    let inputs = f.inputs.clone().k(k);
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(BLOWUP_COROLLARY, formula, inputs, forbidden_note(k)));
    }
    let lhs = f.lambda(0)?.powi(2 * k as i32);
    let rhs = half_trace(&f, k)?;
    let blowup = recognize_blowup_base(g)?;
    let structure = Structure {
        matches: blowup.base == crate::certify::BlowupKind::Base(BaseGraph::P2K1),
        note: format!("blow-up base {} with class sizes {:?}", blowup.base, blowup.class_sizes),
    };
    let (verdict, note) = structural_verdict(lhs, rhs, tol, structure);
    Ok(Certificate::evaluated(BLOWUP_COROLLARY, formula, inputs, lhs, rhs, verdict, Some(note)))
}

/// Whether `g` is `C_5` together with isolated vertices.
fn is_c5_plus_isolated(g: &Graph) -> bool {
    let body: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    body.len() == 5 && g.size() == 5 && body.iter().all(|&v| g.degree(v) == 2)
}

/// `lambda_1^{2k} <= Tr(A^{2k}) / 2 - (2 cos(pi/(k+2)))^{2k}` for non-bipartite
/// `{C_3, ..., C_{2k+1}}`-free graphs; equality exactly when `k = 1` and the
/// graph is `C_5` plus isolated vertices.
pub fn certify_nonbipartite_power(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "lambda1^(2k) <= Tr(A^(2k))/2 - (2cos(pi/(k+2)))^(2k)";
    let inputs = f.inputs.clone().k(k);
    if f.girth.is_bipartite() {
        return Ok(Certificate::not_applicable(NONBIPARTITE_POWER, formula, inputs, "graph is bipartite"));
    }
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(NONBIPARTITE_POWER, formula, inputs, forbidden_note(k)));
    }
    let lhs = f.lambda(0)?.powi(2 * k as i32);
    let rhs = half_trace(&f, k)? - cos_term(k);
    let c5 = is_c5_plus_isolated(g);
    let structure = Structure {
        matches: k == 1 && c5,
        note: if c5 {
            format!("C5 plus {} isolated vertices", g.order() - 5)
        } else {
            "not C5 plus isolated vertices".to_string()
        },
    };
    let (verdict, note) = structural_verdict(lhs, rhs, tol, structure);
    Ok(Certificate::evaluated(NONBIPARTITE_POWER, formula, inputs, lhs, rhs, verdict, Some(note)))
}

/// `m <= ((n - 2k + 1) / 2)^2 + 2k - 1` for non-bipartite
/// `{C_3, ..., C_{2k+1}}`-free graphs, compared exactly.
pub fn certify_edge_bound(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "m <= ((n-2k+1)/2)^2 + 2k - 1";
    let inputs = f.inputs.clone().k(k);
    if f.girth.is_bipartite() {
        return Ok(Certificate::not_applicable(EDGE_BOUND, formula, inputs, "graph is bipartite"));
    }
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(EDGE_BOUND, formula, inputs, forbidden_note(k)));
    }
    let (n, m, k) = (f.n as i128, f.m as i128, k as i128);
    // compare 4m with (n - 2k + 1)^2 + 8k - 4
    let lhs4 = 4 * m;
    let rhs4 = (n - 2 * k + 1).pow(2) + 8 * k - 4;
    let verdict = match lhs4.cmp(&rhs4) {
        std::cmp::Ordering::Less => Verdict::HoldsStrict,
        std::cmp::Ordering::Equal => Verdict::HoldsEquality,
        std::cmp::Ordering::Greater => Verdict::Violated,
    };
    Ok(Certificate::evaluated(
        EDGE_BOUND,
        formula,
        inputs,
        f.m as f64,
        rhs4 as f64 / 4.0,
        verdict,
        Some("exact integer comparison".to_string()),
    ))
}

/// Side sizes `floor((n-2k+1)/2)`, `ceil((n-2k+1)/2)` of the extremal graph.
pub fn extremal_sides(n: usize, k: usize) -> Result<(usize, usize)> {
    if n < 2 * k + 4 {
        return Err(Error::domain(format!("order {n} is below 2k+4 = {}", 2 * k + 4)));
    }
    let total = n - 2 * k + 1;
    Ok((total / 2, total - total / 2))
}

/// `lambda_1(G) <= lambda_1(R_k(K_{a,b}))` with `a, b` the balanced split of
/// `n - 2k + 1`, for non-bipartite `{C_3, ..., C_{2k+1}}`-free graphs on
/// `n >= 2k + 4` vertices; equality exactly for that graph.
pub fn certify_extremal_radius(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "lambda1 <= lambda1(R_k(K_{floor((n-2k+1)/2), ceil((n-2k+1)/2)}))";
    let inputs = f.inputs.clone().k(k);
    if f.girth.is_bipartite() {
        return Ok(Certificate::not_applicable(EXTREMAL_RADIUS, formula, inputs, "graph is bipartite"));
    }
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(EXTREMAL_RADIUS, formula, inputs, forbidden_note(k)));
    }
    if f.n < 2 * k + 4 {
        return Ok(Certificate::not_applicable(
            EXTREMAL_RADIUS,
            formula,
            inputs,
            format!("order {} is below 2k+4 = {}", f.n, 2 * k + 4),
        ));
    }
    let (a, b) = extremal_sides(f.n, k)?;
    let lhs = f.lambda(0)?;
    let rhs = rk_spectral_radius(k, a, b)?;
    let iso = are_isomorphic(g, &rk_bipartite(k, a, b)?)?;
    let structure = Structure {
        matches: iso,
        note: format!(
            "{} R_{k}(K_{{{a},{b}}})",
            if iso { "isomorphic to" } else { "not isomorphic to" }
        ),
    };
    let (verdict, note) = structural_verdict(lhs, rhs, tol, structure);
    Ok(Certificate::evaluated(EXTREMAL_RADIUS, formula, inputs, lhs, rhs, verdict, Some(note)))
}

/// `m < (n / 2) lambda_1(R_k(K_{a,b}))` under the same hypotheses as
/// [`certify_extremal_radius`].
pub fn certify_edge_radius_corollary(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "m < (n/2) lambda1(R_k(K_{floor((n-2k+1)/2), ceil((n-2k+1)/2)}))";
    let inputs = f.inputs.clone().k(k);
    if f.girth.is_bipartite() || !f.forbidden_free(k) || f.n < 2 * k + 4 {
        return Ok(Certificate::not_applicable(
            EDGE_RADIUS_COROLLARY,
            formula,
            inputs,
            "needs a non-bipartite forbidden-free graph on at least 2k+4 vertices",
        ));
    }
    let (a, b) = extremal_sides(f.n, k)?;
    let lhs = f.m as f64;
    let rhs = f.n as f64 / 2.0 * rk_spectral_radius(k, a, b)?;
    let (verdict, note) = strict_verdict(lhs, rhs, tol);
    Ok(Certificate::evaluated(EDGE_RADIUS_COROLLARY, formula, inputs, lhs, rhs, verdict, note))
}

/// `lambda_1 < (m Delta^{2k-2} - (2 cos(pi/(k+2)))^{2k})^{1/(2k)}` for
/// `k >= 2` and non-bipartite `{C_3, ..., C_{2k+1}}`-free graphs.
pub fn certify_max_degree_corollary(g: &Graph, k: usize, tol: &Tolerances) -> Result<Certificate> {
    check_k(k)?;
    let f = Facts::new(g, tol)?;
    let formula = "lambda1 < (m Delta^(2k-2) - (2cos(pi/(k+2)))^(2k))^(1/(2k))";
    let inputs = f.inputs.clone().k(k);
    if k < 2 {
        return Ok(Certificate::not_applicable(MAX_DEGREE_COROLLARY, formula, inputs, "needs k >= 2"));
    }
    if f.girth.is_bipartite() {
        return Ok(Certificate::not_applicable(MAX_DEGREE_COROLLARY, formula, inputs, "graph is bipartite"));
    }
    if !f.forbidden_free(k) {
        return Ok(Certificate::not_applicable(MAX_DEGREE_COROLLARY, formula, inputs, forbidden_note(k)));
    }
    let delta = g.max_degree() as f64;
    let inner = f.m as f64 * delta.powi(2 * k as i32 - 2) - cos_term(k);
    let rhs = inner.max(0.0).powf(1.0 / (2 * k) as f64);
    let (verdict, note) = strict_verdict(f.lambda(0)?, rhs, tol);
    Ok(Certificate::evaluated(MAX_DEGREE_COROLLARY, formula, inputs, f.lambda(0)?, rhs, verdict, note))
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Tr(A^{2k}(C_{2k+3})) = (2k+3) binom(2k, k)`, checked exactly for `1 <= k <= 10`.
pub fn verify_walk_identity(k: usize) -> Result<bool> {
    if !(1..=10).contains(&k) {
        return Err(Error::domain(format!("walk identity is checked for 1 <= k <= 10, got {k}")));
    }
    let walks = crate::spectral::closed_walks(&cycle(2 * k + 3)?, 2 * k as u32)?;
    Ok(walks == BigUint::from(2 * k as u64 + 3) * binomial(2 * k as u64, k as u64))
}

/// Both gap inequalities for one `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCheck {
    pub k: usize,
    /// `((2k+3) binom(2k,k) / 2 - (2cos(pi/(k+2)))^{2k}) / 4^k - 1`, which
    /// must exceed the guard.
    #[serde(serialize_with = "round_f64")]
    pub normalized_margin: f64,
    /// `4 < (2k+3) binom(2k,k) / 4^k` by exact integers; only for `k >= 10`.
    pub companion: Option<bool>,
    pub holds: bool,
}

/// Floating guard for the normalized gap margin.
pub const GAP_GUARD: f64 = 1e-6;

/// `2^{2k} < (2k+3) binom(2k,k) / 2 - (2cos(pi/(k+2)))^{2k}` for `k >= 2`,
/// plus `4 < (2k+3) binom(2k,k) / 2^{2k}` for `k >= 10`.
///
/// Both sides are divided by `4^k`; `binom(2k,k) / 4^k` is the product of
/// `(2i-1)/(2i)`, which stays well scaled for any `k`.
pub fn verify_gap_inequality(k: usize) -> Result<GapCheck> {
    if k < 2 {
        return Err(Error::domain(format!("gap inequality needs k >= 2, got {k}")));
    }
    let central: f64 = (1..=k).map(|i| (2 * i - 1) as f64 / (2 * i) as f64).product();
    let cos_ratio = (std::f64::consts::PI / (k as f64 + 2.0)).cos().powi(2 * k as i32);
    let normalized_margin = (2 * k + 3) as f64 * central / 2.0 - cos_ratio - 1.0;
    let companion = (k >= 10).then(|| {
        let lhs = BigUint::from(4u32).pow(k as u32 + 1);
        BigUint::from(2 * k as u64 + 3) * binomial(2 * k as u64, k as u64) > lhs
    });
    let holds = normalized_margin > GAP_GUARD && companion.unwrap_or(true);
    Ok(GapCheck {
        k,
        normalized_margin,
        companion,
        holds,
    })
}

/// The two routes to `lambda_1(R_k(K_{s,t}))` and `lambda_1(R_k(K_{s+1,t-1}))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusMonotonicity {
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub applicable: bool,
    #[serde(serialize_with = "round_opt")]
    pub root_st: Option<f64>,
    #[serde(serialize_with = "round_opt")]
    pub root_shifted: Option<f64>,
    #[serde(serialize_with = "round_opt")]
    pub dense_st: Option<f64>,
    #[serde(serialize_with = "round_opt")]
    pub dense_shifted: Option<f64>,
    /// Largest disagreement between the quotient root and the dense
    /// eigensolver, when the dense route ran.
    #[serde(serialize_with = "round_opt")]
    pub route_gap: Option<f64>,
    pub holds: bool,
}

/// Order limit for the dense cross-check.
pub const DENSE_CHECK_MAX_N: usize = 40;
/// Required agreement between the two routes.
pub const ROUTE_TOL: f64 = 1e-9;

/// `lambda_1(R_k(K_{s+1,t-1})) > lambda_1(R_k(K_{s,t}))` when `t - s >= 2`.
pub fn verify_radius_monotonicity(k: usize, s: usize, t: usize) -> Result<RadiusMonotonicity> {
    check_k(k)?;
    if s < 2 || t < s {
        return Err(Error::domain(format!("needs t >= s >= 2, got s={s}, t={t}")));
    }
    let mut out = RadiusMonotonicity {
        k,
        s,
        t,
        applicable: t - s >= 2,
        root_st: None,
        root_shifted: None,
        dense_st: None,
        dense_shifted: None,
        route_gap: None,
        holds: false,
    };
    if !out.applicable {
        return Ok(out);
    }
    let a = rk_spectral_radius(k, s, t)?;
    let b = rk_spectral_radius(k, s + 1, t - 1)?;
    out.root_st = Some(a);
    out.root_shifted = Some(b);
    out.holds = b > a;
    if s + t + 2 * k - 1 <= DENSE_CHECK_MAX_N {
        let da = spectrum(&rk_bipartite(k, s, t)?, DEFAULT_ZERO_TOL)?.lambda1();
        let db = spectrum(&rk_bipartite(k, s + 1, t - 1)?, DEFAULT_ZERO_TOL)?.lambda1();
        let gap = (da - a).abs().max((db - b).abs());
        out.dense_st = Some(da);
        out.dense_shifted = Some(db);
        out.route_gap = Some(gap);
        out.holds &= db > da && gap <= ROUTE_TOL;
    }
    Ok(out)
}

/// Numeric-only helper used by the classical bounds and probes.
pub(crate) fn plain(
    claim: &str,
    formula: &str,
    inputs: crate::certify::Inputs,
    lhs: f64,
    rhs: f64,
    tol: &Tolerances,
) -> Certificate {
    let (verdict, note) = numeric_verdict(lhs, rhs, tol);
    Certificate::evaluated(claim, formula, inputs, lhs, rhs, verdict, note)
}
