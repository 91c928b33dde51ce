use spectral_lab::certify::{
    certify_claim, certify_edge_bound, certify_extremal_radius, certify_nonbipartite_power, certify_sum_of_powers,
    probe_bollobas_nikiforov, probe_zls, recognize_blowup_base, verify_gap_inequality, verify_radius_monotonicity,
    BlowupKind, ClaimParams, Tolerances, Verdict, CLAIM_IDS,
};
use spectral_lab::graph::{
    blow_up, complete, complete_bipartite, cycle, rk_bipartite, split_graph, BaseGraph, Graph,
};
use spectral_lab::search::are_isomorphic;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

#[test]
fn sum_of_powers_examples() {
    let c = certify_sum_of_powers(&complete_bipartite(2, 3).unwrap(), 1, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsEquality);
    assert!((c.lhs.unwrap() - 6.0).abs() < 1e-9 && (c.rhs.unwrap() - 6.0).abs() < 1e-12);
    assert!(c.structure_note.as_deref().unwrap().contains("P2+K1"));

    let c = certify_sum_of_powers(&cycle(7).unwrap(), 2, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsStrict);
    assert_eq!(c.rhs, Some(21.0));

    let b = blow_up(&BaseGraph::P5K1.graph(), &[1, 2, 1, 2, 1, 0]).unwrap();
    let c = certify_sum_of_powers(&b, 3, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsEquality);
    assert!(c.structure_note.as_deref().unwrap().contains("P5+K1"));

    let c = certify_sum_of_powers(&cycle(5).unwrap(), 1, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsStrict);
    let c = certify_sum_of_powers(&cycle(5).unwrap(), 2, &tol()).unwrap();
    assert!(!c.applicable);
    assert_eq!(c.verdict, Verdict::NotApplicable);
}

#[test]
fn blowup_recognition_examples() {
    let g = complete_bipartite(4, 7).unwrap().disjoint_union(&Graph::empty(3));
    let r = recognize_blowup_base(&g).unwrap();
    assert_eq!(r.base, BlowupKind::Base(BaseGraph::P2K1));
    let mut sides = r.class_sizes[..2].to_vec();
    sides.sort();
    assert_eq!((sides, r.class_sizes[2]), (vec![4, 7], 3));

    let two = complete_bipartite(2, 3).unwrap().disjoint_union(&complete_bipartite(1, 2).unwrap());
    let r = recognize_blowup_base(&two).unwrap();
    assert_eq!(r.base, BlowupKind::Base(BaseGraph::TwoP2K1));
    assert_eq!(r.class_sizes.last(), Some(&0));

    let r = recognize_blowup_base(&cycle(5).unwrap()).unwrap();
    assert!(!r.is_base());
    assert_eq!(r.rank, 5);
}

/// Blow-ups of every base with class sizes up to 3 are recognized, and the
/// reported sizes rebuild an isomorphic graph.
#[test]
fn blowups_round_trip() {
    for base in BaseGraph::ALL {
        let h = base.graph();
        let len = h.order();
        let mut sizes = vec![0usize; len];
        let mut checked = 0;
        loop {
            let g = blow_up(&h, &sizes).unwrap();
            if g.order() > 0 && g.order() <= 12 {
                let r = recognize_blowup_base(&g).unwrap();
                assert!(r.is_base(), "{base:?} {sizes:?}");
                assert!(r.rank_consistent);
                let BlowupKind::Base(found) = r.base else { unreachable!() };
                let rebuilt = blow_up(&found.graph(), &r.class_sizes).unwrap();
                assert!(are_isomorphic(&g, &rebuilt).unwrap(), "{base:?} {sizes:?}");
                if sizes[..len - 1].iter().all(|&s| s > 0) {
                    assert_eq!(found, base, "{sizes:?}");
                }
                checked += 1;
            }
            let mut i = 0;
            while i < len && sizes[i] == 3 {
                sizes[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            sizes[i] += 1;
        }
        assert!(checked > 0);
    }
}

#[test]
fn nonbipartite_power_examples() {
    let c = certify_nonbipartite_power(&cycle(5).unwrap(), 1, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsEquality);
    let c5i = cycle(5).unwrap().disjoint_union(&Graph::empty(3));
    assert_eq!(certify_nonbipartite_power(&c5i, 1, &tol()).unwrap().verdict, Verdict::HoldsEquality);
    let c = certify_nonbipartite_power(&cycle(7).unwrap(), 2, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsStrict);
    assert!((c.rhs.unwrap() - 17.0).abs() < 1e-9);
    assert!((c.lhs.unwrap() - 16.0).abs() < 1e-9);
}

#[test]
fn edge_bound_examples() {
    let c = certify_edge_bound(&cycle(5).unwrap(), 1, &tol()).unwrap();
    assert_eq!((c.verdict, c.lhs, c.rhs), (Verdict::HoldsEquality, Some(5.0), Some(5.0)));
    let c = certify_edge_bound(&rk_bipartite(1, 3, 3).unwrap(), 1, &tol()).unwrap();
    assert_eq!((c.verdict, c.lhs, c.rhs), (Verdict::HoldsEquality, Some(10.0), Some(10.0)));
    let c = certify_edge_bound(&cycle(9).unwrap(), 2, &tol()).unwrap();
    assert_eq!((c.verdict, c.lhs, c.rhs), (Verdict::HoldsStrict, Some(9.0), Some(12.0)));
}

#[test]
fn extremal_radius_examples() {
    let c = certify_extremal_radius(&rk_bipartite(1, 2, 3).unwrap(), 1, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsEquality);
    let pendant = Graph::from_edges(8, (0..7).map(|i| (i, (i + 1) % 7)).chain([(0, 7)])).unwrap();
    assert_eq!(certify_extremal_radius(&pendant, 1, &tol()).unwrap().verdict, Verdict::HoldsStrict);
    let c = certify_extremal_radius(&complete_bipartite(2, 3).unwrap(), 2, &tol()).unwrap();
    assert!(!c.applicable);
}

#[test]
fn gap_and_monotonicity_checks() {
    for k in [2, 3, 10] {
        assert!(verify_gap_inequality(k).unwrap().holds, "k={k}");
    }
    assert!(verify_radius_monotonicity(1, 2, 4).unwrap().holds);
    assert!(verify_radius_monotonicity(2, 3, 7).unwrap().holds);
    let m = verify_radius_monotonicity(1, 3, 3).unwrap();
    assert!(!m.applicable);
}

#[test]
fn conjecture_probes() {
    let c = probe_bollobas_nikiforov(&cycle(5).unwrap(), 2, &tol()).unwrap();
    assert!((c.lhs.unwrap() - 4.381_966_011_250_105).abs() < 1e-9);
    assert_eq!(c.rhs, Some(5.0));
    let c = probe_bollobas_nikiforov(&petersen(), 3, &tol()).unwrap();
    assert_eq!(c.verdict, Verdict::HoldsStrict);
    assert!((c.lhs.unwrap() - 10.0).abs() < 1e-9);
    assert!((c.rhs.unwrap() - 20.0).abs() < 1e-12);

    assert_eq!(probe_zls(&split_graph(8, 2).unwrap(), 2, &tol()).unwrap().verdict, Verdict::HoldsEquality);
    let c = probe_zls(&complete(7).unwrap(), 2, &tol()).unwrap();
    assert_eq!((c.verdict, c.rhs), (Verdict::HoldsStrict, Some(5.0)));
}

#[test]
fn every_claim_id_dispatches() {
    let g = cycle(7).unwrap();
    for id in CLAIM_IDS {
        let params = ClaimParams { k: 2, r: None };
        let certs = certify_claim(&g, id, params, &tol()).unwrap();
        assert!(!certs.is_empty(), "{id}");
        if *id != "all-classical" {
            assert!(certs.iter().all(|c| c.claim_id == *id), "{id}");
        }
    }
    assert!(certify_claim(&g, "nope", ClaimParams::k(1), &tol()).is_err());
}

#[test]
fn classical_report_on_complete_graph() {
    let certs = certify_claim(&complete(4).unwrap(), "all-classical", ClaimParams::k(1), &tol()).unwrap();
    assert!(certs.iter().all(|c| c.applicable));
    let ids: Vec<&str> = certs.iter().map(|c| c.claim_id.as_str()).collect();
    for id in ["stanley", "wu_elphick", "hong", "wilf", "spectral_turan"] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }
    let json_a: Vec<String> = certs.iter().map(|c| c.to_json()).collect();
    let again = certify_claim(&complete(4).unwrap(), "all-classical", ClaimParams::k(1), &tol()).unwrap();
    let json_b: Vec<String> = again.iter().map(|c| c.to_json()).collect();
    assert_eq!(json_a, json_b);
}
