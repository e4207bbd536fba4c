use motifcut::{parse_graph, render_graph};
use motifcut_core::{Graph, Kind};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..12, any::<bool>()).prop_flat_map(|(n, directed)| {
        let kind = if directed { Kind::Directed } else { Kind::Undirected };
        proptest::collection::btree_map((0..n, 0..n), 1e-6f64..1e6, 0..40).prop_map(move |edges| {
            let mut seen = std::collections::BTreeSet::new();
            let kept = edges.into_iter().filter(|&((u, v), _)| {
                u != v && seen.insert(if directed || u < v { (u, v) } else { (v, u) })
            });
            Graph::new(n, kind, kept.map(|((u, v), w)| (u, v, w))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(g in graph()) {
        let text = render_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(render_graph(&back), text);
    }
}
