//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines always show up in
//! `cargo test` output. Exits non-zero when a criterion fails for a reason not
//! listed in `UNATTAINABLE`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectral_lab::certify::{
    certify_classical, certify_nonbipartite_power, classical_bounds_report, verify_radius_monotonicity,
    verify_walk_identity, Certificate, Tolerances, Verdict,
};
use spectral_lab::certify::{is_probe, ClaimParams};
use spectral_lab::graph::{complete, complete_bipartite, cycle, rk_bipartite, t_tree, Graph};
use spectral_lab::search::{
    are_isomorphic, canonical_form, counterexample_scan, enumerate_map, equality_census, extremal_radius_search,
    Filter, SearchOptions,
};
use spectral_lab::spectral::{closed_walks, rk_spectral_radius, spectrum, DEFAULT_ZERO_TOL};

const EXTREMAL_PAIRS: [(usize, usize); 6] = [(6, 1), (7, 1), (8, 1), (9, 1), (8, 2), (9, 2)];

/// Criteria whose statement cannot hold, with the reason. A FAIL here is
/// reported but does not fail the run.
const UNATTAINABLE: &[(u32, &str)] = &[(
    6,
    "T_{1,2,4} is the E8 tree, so lambda1 equals 2cos(pi/30) and the strict lower bound cannot hold",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn opts(workers: usize) -> SearchOptions {
    SearchOptions {
        workers,
        ..SearchOptions::default()
    }
}

/// Closed walks of length `len` on `C_n` by dynamic programming over offsets.
fn cycle_closed_walks(n: usize, len: usize) -> BigUint {
    let mut ways = vec![BigUint::from(0u32); n];
    ways[0] = BigUint::from(1u32);
    for _ in 0..len {
        let mut next = vec![BigUint::from(0u32); n];
        for (i, w) in ways.iter().enumerate() {
            next[(i + 1) % n] += w;
            next[(i + n - 1) % n] += w;
        }
        ways = next;
    }
    BigUint::from(n) * &ways[0]
}

/// Binomial coefficient from Pascal's triangle.
fn pascal(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = vec![BigUint::from(1u32); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k].clone()
}

fn walk_identity() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 1..=10usize {
        let n = 2 * k + 3;
        let exact = closed_walks(&cycle(n).unwrap(), 2 * k as u32).unwrap();
        let expected = BigUint::from(n) * pascal(2 * k, k);
        let ok = exact == expected && cycle_closed_walks(n, 2 * k) == expected && verify_walk_identity(k).unwrap();
        if !ok {
            bad.push(k);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome::new(
        bad.is_empty() && secs < 1.0,
        format!("k = 1..10 exact, {secs:.3} s, failing k: {bad:?}"),
    )
}

fn census_universes() -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (3..=8).map(|n| (n, 1)).collect();
    v.extend((5..=9).map(|n| (n, 2)));
    v
}

fn sum_of_powers_census(jsons: &mut Vec<String>) -> Outcome {
    let mut failures = Vec::new();
    let mut n8_total = 0;
    let mut equalities = 0;
    for (n, k) in census_universes() {
        let r = equality_census(n, k, &opts(1)).unwrap();
        if n == 8 && k == 1 {
            n8_total = r.total_canonical;
        }
        equalities += r.equality_graphs.len();
        if !r.confirmed || !r.counterexamples.is_empty() || Some(&r.equality_graphs) != r.recognized_graphs.as_ref() {
            failures.push((n, k));
        }
        jsons.push(r.to_json());
    }
    Outcome::new(
        failures.is_empty() && n8_total == 12346,
        format!("{n8_total} classes at n=8, {equalities} equality classes all recognized blow-ups, failing (n,k): {failures:?}"),
    )
}

fn extremal_radius(jsons: &mut Vec<String>) -> Outcome {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for (n, k) in EXTREMAL_PAIRS {
        let r = extremal_radius_search(n, k, &opts(1)).unwrap();
        let total = n - 2 * k + 1;
        let (a, b) = (total / 2, total - total / 2);
        let expected = rk_bipartite(k, a, b).unwrap();
        let root = rk_spectral_radius(k, a, b).unwrap();
        let dense = spectrum(&expected, DEFAULT_ZERO_TOL).unwrap().lambda1();
        let best = r.extremal_value.unwrap_or(f64::NAN);
        let gap = (best - root).abs().max((dense - root).abs());
        worst = worst.max(gap);
        let unique = r.extremal_graphs == vec![canonical_form(&expected).unwrap()];
        if !(unique && gap <= 1e-9 && r.confirmed) {
            failures.push((n, k));
        }
        jsons.push(r.to_json());
    }
    Outcome::new(
        failures.is_empty(),
        format!("6 pairs, unique maximizer R_k(K_a,b), worst root gap {worst:.1e}, failing: {failures:?}"),
    )
}

fn c5_plus_isolated(n: usize) -> Graph {
    cycle(5).unwrap().disjoint_union(&Graph::empty(n - 5))
}

fn nonbipartite_power() -> Outcome {
    let mut failures = Vec::new();
    let claim = "thm1.3";
    for n in 1..=8 {
        let r = counterexample_scan(n, claim, ClaimParams::k(1), &opts(1)).unwrap();
        let expected: Vec<String> = if n >= 5 {
            vec![canonical_form(&c5_plus_isolated(n)).unwrap()]
        } else {
            vec![]
        };
        if !r.counterexamples.is_empty() || r.equality_graphs != expected {
            failures.push(format!("k=1 n={n}"));
        }
    }
    for n in 1..=9 {
        let r = counterexample_scan(n, claim, ClaimParams::k(2), &opts(1)).unwrap();
        if !r.counterexamples.is_empty() || !r.equality_graphs.is_empty() {
            failures.push(format!("k=2 n={n}"));
        }
    }
    let c5 = cycle(5).unwrap();
    let cert = certify_nonbipartite_power(&c5, 1, &Tolerances::default()).unwrap();
    let exact = closed_walks(&c5, 2).unwrap() == BigUint::from(10u32);
    let c5_ok = exact
        && cert.verdict == Verdict::HoldsEquality
        && (cert.lhs.unwrap() - 4.0).abs() < 1e-12
        && (cert.rhs.unwrap() - 4.0).abs() < 1e-12;
    if !c5_ok {
        failures.push("C5 instance".to_string());
    }
    Outcome::new(
        failures.is_empty(),
        format!("k=1 equality only on C5 + isolated vertices, k=2 strict throughout, C5: 4 = 10/2 - 1, failing: {failures:?}"),
    )
}

fn radius_monotonicity() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for k in 1..=4 {
        for s in 2..=11 {
            for t in s + 2..=24 - s {
                let m = verify_radius_monotonicity(k, s, t).unwrap();
                checked += 1;
                let gap = m.route_gap.unwrap_or(f64::INFINITY);
                worst = worst.max(gap);
                let dense_up = match (m.dense_st, m.dense_shifted) {
                    (Some(a), Some(b)) => b > a,
                    _ => false,
                };
                if !(m.applicable && m.holds && dense_up && gap <= 1e-9) {
                    failures.push((k, s, t));
                }
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("{checked} triples, both routes agree within {worst:.1e}, failing: {failures:?}"),
    )
}

fn t_tree_spectra() -> (Outcome, Option<String>) {
    use std::f64::consts::PI;
    let mut failures = Vec::new();
    for c in 1..=20usize {
        let s = spectrum(&t_tree(1, 1, c).unwrap(), DEFAULT_ZERO_TOL).unwrap();
        let mut expected: Vec<f64> = (1..=c + 2)
            .map(|j| 2.0 * ((2 * j - 1) as f64 * PI / (2 * c + 4) as f64).cos())
            .collect();
        expected.push(0.0);
        expected.sort_by(|x, y| y.total_cmp(x));
        let ok = s.values.len() == expected.len()
            && s.values.iter().zip(&expected).all(|(x, y)| (x - y).abs() <= 1e-9);
        if !ok {
            failures.push(format!("T(1,1,{c})"));
        }
    }
    let radius = |c| spectrum(&t_tree(1, 2, c).unwrap(), DEFAULT_ZERO_TOL).unwrap().lambda1();
    let l122 = radius(2);
    let l123 = radius(3);
    let l124 = radius(4);
    if (l122 - 2.0 * (PI / 12.0).cos()).abs() > 1e-9 {
        failures.push("T(1,2,2)".to_string());
    }
    if (l123 - 2.0 * (PI / 18.0).cos()).abs() > 1e-9 {
        failures.push("T(1,2,3)".to_string());
    }
    let upper = 2.0 * (PI / 31.0).cos() > l124;
    let lower = l124 > 2.0 * (PI / 30.0).cos();
    if !upper {
        failures.push("T(1,2,4) upper".to_string());
    }
    let note = if lower {
        None
    } else {
        failures.push("T(1,2,4) lower".to_string());
        Some(format!(
            "lambda1(T_1,2,4) - 2cos(pi/30) = {:.1e}",
            l124 - 2.0 * (PI / 30.0).cos()
        ))
    };
    (
        Outcome::new(
            failures.is_empty(),
            format!("T(1,1,c) for c <= 20, T(1,2,2), T(1,2,3), T(1,2,4) bracket; failing: {failures:?}"),
        ),
        note,
    )
}

fn edge_bound() -> Outcome {
    let mut failures = Vec::new();
    let mut equality: BTreeSet<(usize, String)> = BTreeSet::new();
    for (n, k) in census_universes() {
        let r = counterexample_scan(n, "thm1.04", ClaimParams::k(k), &opts(1)).unwrap();
        if !r.counterexamples.is_empty() {
            failures.push((n, k));
        }
        equality.extend(r.equality_graphs.into_iter().map(|g| (k, g)));
    }
    let c5 = (1, canonical_form(&cycle(5).unwrap()).unwrap());
    let r1k33 = (1, canonical_form(&rk_bipartite(1, 3, 3).unwrap()).unwrap());
    let attained = equality.contains(&c5) && equality.contains(&r1k33);
    Outcome::new(
        failures.is_empty() && attained,
        format!(
            "{} equality classes including C5 and R_1(K_3,3): {attained}, violating (n,k): {failures:?}",
            equality.len()
        ),
    )
}

/// Checked over all vertex triples.
fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|a| {
        (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * (n - 1) / 2
}

/// Every component with an edge is `K_{Delta,Delta}`.
fn union_of_regular_bicliques(g: &Graph) -> bool {
    let d = g.max_degree();
    d > 0
        && g.components().iter().filter(|c| c.len() > 1).all(|c| {
            are_isomorphic(&g.induced_subgraph(c), &complete_bipartite(d, d).unwrap()).unwrap()
        })
}

fn find<'a>(certs: &'a [Certificate], id: &str) -> impl Iterator<Item = &'a Certificate> {
    let id = id.to_string();
    certs.iter().filter(move |c| c.claim_id == id)
}

fn classical_observatory() -> Outcome {
    let tol = Tolerances::default();
    let mut failures: Vec<String> = Vec::new();
    let mut triangle_free = 0;
    let mut certificates = 0;
    for n in 1..=8 {
        let rows = enumerate_map(n, &Filter::all(), 1, 10, |g| {
            let certs = classical_bounds_report(&g, &tol).unwrap();
            Some((g, certs))
        })
        .unwrap();
        for (g, certs) in rows {
            let code = canonical_form(&g).unwrap();
            certificates += certs.len();
            for c in &certs {
                if c.verdict == Verdict::Violated && !is_probe(&c.claim_id) {
                    failures.push(format!("{} violated on {code}", c.claim_id));
                }
            }
            let hong_eq = find(&certs, "hong").any(|c| c.verdict == Verdict::HoldsEquality);
            if g.is_connected() && hong_eq != (is_star(&g) || is_complete(&g)) {
                failures.push(format!("hong equality mismatch on {code}"));
            }
            if !has_triangle(&g) {
                triangle_free += 1;
                let nosal: Vec<_> = find(&certs, "nosal").collect();
                if nosal.len() != 1 || !nosal[0].applicable || nosal[0].verdict == Verdict::Violated {
                    failures.push(format!("nosal missing on {code}"));
                }
            }
            let bicliques = union_of_regular_bicliques(&g);
            for c in find(&certs, "chen_qian") {
                let even = c.inputs.l.unwrap_or(1) % 2 == 0;
                if (c.verdict == Verdict::HoldsEquality) != (bicliques && even) {
                    failures.push(format!("chen_qian l={:?} equality mismatch on {code}", c.inputs.l));
                }
            }
        }
    }
    for n in 1..=8 {
        let c = certify_classical(&complete(n).unwrap(), "wilf", &tol).unwrap();
        if c.iter().any(|c| c.verdict != Verdict::HoldsEquality) {
            failures.push(format!("wilf on K_{n}"));
        }
    }
    failures.truncate(10);
    Outcome::new(
        failures.is_empty(),
        format!("{certificates} certificates on n <= 8, {triangle_free} triangle-free classes, problems: {failures:?}"),
    )
}

fn quotient_root() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for _ in 0..200 {
        let k = rng.gen_range(1..=5);
        let s = rng.gen_range(2..=15);
        let t = rng.gen_range(2..=15);
        let root = rk_spectral_radius(k, s, t).unwrap();
        let dense = spectrum(&rk_bipartite(k, s, t).unwrap(), DEFAULT_ZERO_TOL).unwrap().lambda1();
        let gap = (root - dense).abs();
        worst = worst.max(gap);
        if gap > 1e-9 {
            failures.push((k, s, t));
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("200 sampled (k,s,t), worst gap {worst:.1e}, failing: {failures:?}"),
    )
}

fn determinism(reference: &[String]) -> Outcome {
    let mut mismatches = 0;
    for workers in [2, 4] {
        let mut jsons = Vec::new();
        for (n, k) in census_universes() {
            jsons.push(equality_census(n, k, &opts(workers)).unwrap().to_json());
        }
        for (n, k) in EXTREMAL_PAIRS {
            jsons.push(extremal_radius_search(n, k, &opts(workers)).unwrap().to_json());
        }
        mismatches += jsons.iter().zip(reference).filter(|(a, b)| a != b).count();
        mismatches += jsons.len().abs_diff(reference.len());
    }
    Outcome::new(
        mismatches == 0,
        format!("{} reports rerun with 2 and 4 workers, {mismatches} differ", reference.len()),
    )
}

fn main() -> ExitCode {
    let mut jsons = Vec::new();
    let mut results: Vec<(u32, &str, Outcome, Option<String>)> = Vec::new();
    let mut record = |id, name, o: Outcome| results.push((id, name, o, None));
    record(1, "walk identity", walk_identity());
    record(2, "sum-of-powers census", sum_of_powers_census(&mut jsons));
    record(3, "extremal spectral radius", extremal_radius(&mut jsons));
    record(4, "non-bipartite power equality set", nonbipartite_power());
    record(5, "radius monotonicity", radius_monotonicity());
    let (o, note) = t_tree_spectra();
    results.push((6, "T-tree spectra", o, note));
    let mut record = |id, name, o: Outcome| results.push((id, name, o, None));
    record(7, "edge bound", edge_bound());
    record(8, "classical bounds observatory", classical_observatory());
    record(9, "quotient root vs dense radius", quotient_root());
    record(10, "determinism across worker counts", determinism(&jsons));

    let mut unexpected = 0;
    for (id, name, o, note) in &results {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status}  {name}: {}", o.detail);
        if let Some(note) = note {
            println!("             {note}");
        }
        if !o.pass {
            match UNATTAINABLE.iter().find(|(u, _)| u == id) {
                Some((_, why)) => println!("             unattainable as stated: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
