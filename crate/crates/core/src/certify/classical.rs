//! Classical spectral and walk-count bounds, each as a certificate.

use num_bigint::BigUint;

use crate::certify::certificate::{structural_verdict, Certificate, Structure, Tolerances, Verdict};
use crate::certify::clique::clique_number;
use crate::certify::facts::{big_to_f64, Facts};
use crate::certify::theorems::{certify_max_degree_corollary, plain};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{inertia_sums, walks};

pub const STANLEY: &str = "stanley";
pub const WU_ELPHICK: &str = "wu_elphick";
pub const HONG: &str = "hong";
pub const NIKIFOROV_DELTA: &str = "nikiforov_delta";
pub const WILF: &str = "wilf";
pub const SPECTRAL_TURAN: &str = "spectral_turan";
pub const CHEN_QIAN: &str = "chen_qian";
pub const NOSAL: &str = "nosal";
pub const ELPHICK_PROBE: &str = "conj_elphick";

/// Claim ids covered by [`classical_bounds_report`], in report order.
pub const CLASSICAL_IDS: [&str; 11] = [
    STANLEY,
    WU_ELPHICK,
    HONG,
    NIKIFOROV_DELTA,
    WILF,
    SPECTRAL_TURAN,
    CHEN_QIAN,
    crate::certify::theorems::MAX_DEGREE_COROLLARY,
    NOSAL,
    ELPHICK_PROBE,
    "all-classical",
];

fn body(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) > 0).collect()
}

/// The non-isolated vertices induce a complete graph (vacuous when edgeless).
fn complete_plus_isolated(g: &Graph) -> Structure {
    let b = body(g);
    let q = b.len();
    let matches = g.size() == q * q.saturating_sub(1) / 2;
    Structure {
        matches,
        note: if matches {
            format!("K_{} plus {} isolated vertices", q.max(1), g.order() - q.max(1))
        } else {
            "not a complete graph plus isolated vertices".to_string()
        },
    }
}

/// The non-isolated vertices induce a complete bipartite graph.
fn complete_bipartite_plus_isolated(g: &Graph) -> Structure {
    let b = body(g);
    let h = g.induced_subgraph(&b);
    let mut matches = h.order() == 0;
    let mut sides = (0, 0);
    if h.order() > 0 && h.is_connected() && h.is_bipartite() {
        // a connected bipartite graph has a unique 2-colouring
        let mut colour = vec![usize::MAX; h.order()];
        colour[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for u in h.neighbors(v) {
                if colour[u] == usize::MAX {
                    colour[u] = 1 - colour[v];
                    stack.push(u);
                }
            }
        }
        let a = colour.iter().filter(|&&c| c == 0).count();
        sides = (a, h.order() - a);
        matches = h.size() == a * (h.order() - a);
    }
    Structure {
        matches,
        note: if matches {
            format!(
                "K_{{{},{}}} plus {} isolated vertices",
                sides.0,
                sides.1,
                g.order() - h.order()
            )
        } else {
            "not a complete bipartite graph plus isolated vertices".to_string()
        },
    }
}

fn complete_or_star(g: &Graph) -> Structure {
    let n = g.order();
    let complete = g.size() == n * n.saturating_sub(1) / 2;
    let star = n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1;
    Structure {
        matches: complete || star,
        note: if complete {
            format!("K_{n}")
        } else if star {
            format!("star K_{{1,{}}}", n - 1)
        } else {
            "neither complete nor a star".to_string()
        },
    }
}

/// Every component with an edge is `K_{Delta,Delta}` and `l` is even.
fn chen_qian_structure(g: &Graph, l: usize) -> Structure {
    let delta = g.max_degree();
    let comps = g.components();
    let regular_bicliques = comps.iter().filter(|c| c.len() > 1).all(|c| {
        let h = g.induced_subgraph(c);
        c.len() == 2 * delta && h.is_bipartite() && h.size() == delta * delta
    });
    let matches = l % 2 == 0 && regular_bicliques;
    Structure {
        matches,
        note: if matches {
            format!("every non-trivial component is K_{{{delta},{delta}}} and l is even")
        } else if !regular_bicliques {
            format!("some non-trivial component is not K_{{{delta},{delta}}}")
        } else {
            "l is odd".to_string()
        },
    }
}

fn exact_verdict(lhs: &BigUint, rhs: &BigUint, structure: Structure) -> (Verdict, String) {
    use std::cmp::Ordering::*;
    match (lhs.cmp(rhs), structure.matches) {
        (Equal, true) => (Verdict::HoldsEquality, structure.note),
        (Equal, false) => (
            Verdict::Violated,
            format!("exact equality without the equality structure: {}", structure.note),
        ),
        (Less, true) => (
            Verdict::Violated,
            format!("equality structure present but sides differ: {}", structure.note),
        ),
        (Less, false) => (Verdict::HoldsStrict, structure.note),
        (Greater, _) => (Verdict::Violated, structure.note),
    }
}

fn stanley_rhs(m: usize) -> f64 {
    (((8 * m + 1) as f64).sqrt() - 1.0) / 2.0
}

fn structural(
    claim: &str,
    formula: &str,
    f: &Facts,
    lhs: f64,
    rhs: f64,
    tol: &Tolerances,
    s: Structure,
) -> Certificate {
    let (verdict, note) = structural_verdict(lhs, rhs, tol, s);
    Certificate::evaluated(claim, formula, f.inputs.clone(), lhs, rhs, verdict, Some(note))
}

fn certify_on(f: &Facts, claim: &str, tol: &Tolerances) -> Result<Vec<Certificate>> {
    let g = f.g;
    let (n, m) = (f.n, f.m);
    let na = |formula: &str, why: &str| Certificate::not_applicable(claim, formula, f.inputs.clone(), why);
    let certs = match claim {
        STANLEY => {
            let formula = "lambda1 <= (sqrt(8m+1)-1)/2";
            vec![structural(claim, formula, f, f.lambda(0)?, stanley_rhs(m), tol, complete_plus_isolated(g))]
        }
        WU_ELPHICK => {
            let formula = "sqrt(s+) <= (sqrt(8m+1)-1)/2";
            let s_plus = inertia_sums(f.spec()?, 2)?.s_plus;
            vec![structural(claim, formula, f, s_plus.sqrt(), stanley_rhs(m), tol, complete_plus_isolated(g))]
        }
        HONG => {
            let formula = "lambda1 <= sqrt(2m-n+1)";
            if !g.is_connected() {
                vec![na(formula, "graph is disconnected")]
            } else {
                let rhs = ((2 * m + 1 - n) as f64).sqrt();
                vec![structural(claim, formula, f, f.lambda(0)?, rhs, tol, complete_or_star(g))]
            }
        }
        NIKIFOROV_DELTA => {
            let formula = "lambda1 <= (delta-1)/2 + sqrt(2m - n delta + (1+delta)^2/4)";
            let d = g.min_degree() as f64;
            let rhs = (d - 1.0) / 2.0 + (2.0 * m as f64 - n as f64 * d + (1.0 + d).powi(2) / 4.0).sqrt();
            vec![plain(claim, formula, f.inputs.clone(), f.lambda(0)?, rhs, tol)]
        }
        WILF => {
            let formula = "lambda1 <= (omega-1)/omega n";
            let w = clique_number(g)? as f64;
            let rhs = (w - 1.0) / w * n as f64;
            vec![plain(claim, formula, f.inputs.clone(), f.lambda(0)?, rhs, tol)]
        }
        SPECTRAL_TURAN => {
            let formula = "lambda1^s <= (omega-1)/omega alpha_s";
            let w = clique_number(g)? as f64;
            let mut out = Vec::new();
            for s in 2..=6u32 {
                let alpha = big_to_f64(&walks(g, s)?);
                let mut inputs = f.inputs.clone();
                inputs.s = Some(s as usize);
                let lhs = f.lambda(0)?.powi(s as i32);
                out.push(plain(claim, formula, inputs, lhs, (w - 1.0) / w * alpha, tol));
            }
            out
        }
        CHEN_QIAN => {
            let formula = "beta_l <= 2m Delta^(l-2)";
            if m == 0 {
                vec![na(formula, "graph has no edges")]
            } else {
                let delta = BigUint::from(g.max_degree());
                let mut out = Vec::new();
                for l in 3..=8usize {
                    let beta = f.trace(l as u32)?;
                    let bound = BigUint::from(2 * m) * delta.pow(l as u32 - 2);
                    let (verdict, note) = exact_verdict(&beta, &bound, chen_qian_structure(g, l));
                    out.push(Certificate::evaluated(
                        claim,
                        formula,
                        f.inputs.clone().l(l),
                        big_to_f64(&beta),
                        big_to_f64(&bound),
                        verdict,
                        Some(note),
                    ));
                }
                out
            }
        }
        crate::certify::theorems::MAX_DEGREE_COROLLARY => {
            let mut out = Vec::new();
            if let Some(girth) = f.girth.value() {
                for k in 2..=(girth - 3) / 2 {
                    out.push(certify_max_degree_corollary(g, k, tol)?);
                }
            }
            if out.is_empty() {
                out.push(na(
                    "lambda1 < (m Delta^(2k-2) - (2cos(pi/(k+2)))^(2k))^(1/(2k))",
                    "needs a non-bipartite graph of odd girth at least 7",
                ));
            }
            out
        }
        NOSAL => {
            let formula = "lambda1 <= sqrt(m)";
            if !f.forbidden_free(1) {
                vec![na(formula, "graph contains a triangle")]
            } else {
                let rhs = (m as f64).sqrt();
                vec![structural(claim, formula, f, f.lambda(0)?, rhs, tol, complete_bipartite_plus_isolated(g))]
            }
        }
        ELPHICK_PROBE => {
            let formula = "n - 1 <= min(s+, s-)";
            if !g.is_connected() {
                vec![na(formula, "graph is disconnected")]
            } else {
                let sums = inertia_sums(f.spec()?, 2)?;
                let mut c = plain(claim, formula, f.inputs.clone(), (n - 1) as f64, sums.s_plus.min(sums.s_minus), tol);
                c.structure_note = Some(probe_note(c.verdict));
                vec![c]
            }
        }
        other => return Err(Error::UnknownClaim(other.to_string())),
    };
    Ok(certs)
}

pub(crate) fn probe_note(v: Verdict) -> String {
    match v {
        Verdict::Violated => "probe of an open conjecture: a violation is a finding".to_string(),
        _ => "probe of an open conjecture".to_string(),
    }
}

/// Certificates for one classical bound (several for the families indexed
/// by `s`, `l` or `k`), including `not_applicable` ones.
pub fn certify_classical(g: &Graph, claim: &str, tol: &Tolerances) -> Result<Vec<Certificate>> {
    if !CLASSICAL_IDS[..CLASSICAL_IDS.len() - 1].contains(&claim) {
        return Err(Error::UnknownClaim(claim.to_string()));
    }
    let f = Facts::new(g, tol)?;
    certify_on(&f, claim, tol)
}

/// One certificate per applicable classical bound, in a fixed order.
pub fn classical_bounds_report(g: &Graph, tol: &Tolerances) -> Result<Vec<Certificate>> {
    let f = Facts::new(g, tol)?;
    let mut out = Vec::new();
    for id in &CLASSICAL_IDS[..CLASSICAL_IDS.len() - 1] {
        out.extend(certify_on(&f, id, tol)?.into_iter().filter(|c| c.applicable));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    fn find<'a>(certs: &'a [Certificate], id: &str) -> &'a Certificate {
        certs.iter().find(|c| c.claim_id == id).unwrap()
    }

    #[test]
    fn star_and_complete_hong_equality() {
        let tol = Tolerances::default();
        let star = classical_bounds_report(&complete_bipartite(1, 5).unwrap(), &tol).unwrap();
        assert_eq!(find(&star, HONG).verdict, Verdict::HoldsEquality);
        let k4 = classical_bounds_report(&complete(4).unwrap(), &tol).unwrap();
        assert_eq!(find(&k4, HONG).verdict, Verdict::HoldsEquality);
        assert_eq!(find(&k4, WILF).verdict, Verdict::HoldsEquality);
        assert_eq!(find(&k4, STANLEY).verdict, Verdict::HoldsEquality);
        assert!(k4.iter().all(|c| c.applicable));
        assert!(k4.iter().all(|c| c.claim_id != NOSAL));
    }

    #[test]
    fn k33_chen_qian() {
        let certs = certify_classical(&complete_bipartite(3, 3).unwrap(), CHEN_QIAN, &Tolerances::default()).unwrap();
        let l4 = certs.iter().find(|c| c.inputs.l == Some(4)).unwrap();
        assert_eq!(l4.verdict, Verdict::HoldsEquality);
        assert_eq!(l4.lhs, Some(162.0));
        let l3 = certs.iter().find(|c| c.inputs.l == Some(3)).unwrap();
        assert_eq!(l3.verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn c5_nosal_strict() {
        let certs = classical_bounds_report(&cycle(5).unwrap(), &Tolerances::default()).unwrap();
        assert_eq!(find(&certs, NOSAL).verdict, Verdict::HoldsStrict);
        assert!(certs.iter().all(|c| c.verdict != Verdict::Violated));
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(
            certify_classical(&cycle(5).unwrap(), "nope", &Tolerances::default()),
            Err(Error::UnknownClaim(_))
        ));
    }
}
