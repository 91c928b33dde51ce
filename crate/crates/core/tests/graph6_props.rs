use proptest::prelude::*;

use spectral_lab::graph::Graph;
use spectral_lab::graph6::{from_graph6, parse_stream, to_graph6};
use spectral_lab::search::{are_isomorphic, canonical_form};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn round_trip(g in graph_strategy(30)) {
        let text = to_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(10), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }
}

#[test]
fn known_encodings() {
    assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
    assert!(from_graph6("D?").is_err());
    let items = parse_stream(">>graph6<<\nDhc\n\nD?{\nnot graph\n");
    let lines: Vec<usize> = items.iter().map(|i| i.line).collect();
    assert_eq!(lines, [2, 4, 5]);
    assert!(items[0].graph.is_ok() && items[1].graph.is_ok() && items[2].graph.is_err());
}
