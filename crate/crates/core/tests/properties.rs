use motifcut_core::enumerate::{enumerate_induced_instances, enumerate_instances};
use motifcut_core::graph::{encode_undirected, enumerate_cuts, motif_cut_value};
use motifcut_core::hypergraph::{
    build_motif_hypergraph, estimate_strengths_with, exact_strengths_with_limit, EstimateOptions,
};
use motifcut_core::sparsify::{is_reweighted_subgraph, keep_probability, motif_sparsification, Engine, SparsifyConfig};
use motifcut_core::verify::{
    brute_force_strengths, check_invariants, laminar, max_cut_error, sampled_cut_error,
};
use motifcut_core::weights::{motif_weights_fast, motif_weights_naive};
use motifcut_core::{generate, Graph, Kind, Motif};
use proptest::prelude::*;

fn graph(max_n: usize, kind: Kind) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| if kind == Kind::Directed { u != v } else { u < v })
            .collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::option::weighted(0.6, 0.5f64..2.0), len).prop_map(move |ws| {
            let edges = pairs.iter().zip(ws).filter_map(|(&(u, v), w)| w.map(|w| (u, v, w)));
            Graph::new(n, kind, edges).unwrap()
        })
    })
}

fn any_kind(max_n: usize) -> impl Strategy<Value = Graph> {
    prop_oneof![graph(max_n, Kind::Undirected), graph(max_n, Kind::Directed)]
}

fn motifs(kind: Kind) -> Vec<Motif> {
    vec![Motif::triangle(kind), Motif::path(2, kind).unwrap(), Motif::path(3, kind).unwrap(), Motif::cycle(4, kind).unwrap()]
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hypergraph_preserves_cut_values(g in any_kind(9)) {
        for m in motifs(g.kind()) {
            let list = enumerate_instances(&g, &m).unwrap();
            let h = build_motif_hypergraph(&g, &list);
            for cut in enumerate_cuts(g.n(), 20).unwrap() {
                prop_assert!(close(motif_cut_value(&list, &cut), h.cut_value(&cut.membership(g.n()))));
            }
        }
    }

    #[test]
    fn encoding_keeps_pair_weights(g in graph(10, Kind::Undirected)) {
        let d = encode_undirected(&g).unwrap();
        prop_assert_eq!(d.m(), 2 * g.m());
        for e in g.edges() {
            let (a, b) = (d.weight(e.u, e.v).unwrap(), d.weight(e.v, e.u).unwrap());
            prop_assert!(close(a * b, e.w));
        }
    }

    #[test]
    fn fast_weights_equal_naive(g in any_kind(8)) {
        for m in motifs(g.kind()) {
            let (fast, naive) = (motif_weights_fast(&g, &m).unwrap(), motif_weights_naive(&g, &m).unwrap());
            prop_assert!(fast.iter().zip(&naive).all(|(a, b)| close(*a, *b)));
        }
    }

    #[test]
    fn strengths_match_definition(g in graph(7, Kind::Undirected)) {
        let list = enumerate_instances(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        let h = build_motif_hypergraph(&g, &list);
        let (exact, components) = exact_strengths_with_limit(&h, usize::MAX).unwrap();
        let oracle = brute_force_strengths(&h).unwrap();
        prop_assert!(exact.hyperedge.iter().zip(&oracle).all(|(a, b)| close(*a, *b)));
        prop_assert!(laminar(&components));
    }

    #[test]
    fn estimates_never_exceed_strengths(g in graph(10, Kind::Undirected)) {
        for m in [Motif::triangle(Kind::Undirected), Motif::path(2, Kind::Undirected).unwrap()] {
            let h = build_motif_hypergraph(&g, &enumerate_instances(&g, &m).unwrap());
            let (exact, _) = exact_strengths_with_limit(&h, usize::MAX).unwrap();
            let est = estimate_strengths_with(&h, EstimateOptions { exact_limit: 0 }).unwrap();
            prop_assert!(est.hyperedge.iter().zip(&exact.hyperedge).all(|(e, k)| *e <= k * (1.0 + 1e-9)));
        }
    }

    #[test]
    fn triangles_are_always_induced(g in graph(9, Kind::Undirected)) {
        let m = Motif::triangle(Kind::Undirected);
        prop_assert_eq!(enumerate_instances(&g, &m).unwrap(), enumerate_induced_instances(&g, &m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn structural_invariants_hold(g in graph(8, Kind::Undirected), path in any::<bool>()) {
        let m = if path { Motif::path(2, Kind::Undirected).unwrap() } else { Motif::triangle(Kind::Undirected) };
        let report = check_invariants(&g, &m).unwrap();
        for c in &report.invariants {
            prop_assert!(c.pass, "{} slack {}", c.name, c.slack);
        }
    }

    #[test]
    fn sparsifier_is_deterministic_reweighted_subgraph(
        seed in 0u64..1000,
        scale in prop_oneof![Just(1.0), Just(1e9), Just(1e12)],
        connectivity in any::<bool>(),
    ) {
        let g = generate::gnp(12, 0.6, seed).unwrap();
        let ms = [Motif::triangle(Kind::Undirected), Motif::path(2, Kind::Undirected).unwrap()];
        let engine = if connectivity { Engine::Connectivity } else { Engine::Strength };
        let cfg = SparsifyConfig { epsilon: 0.3, threshold_scale: scale, seed, engine, ..SparsifyConfig::default() };
        let a = motif_sparsification(&g, &ms, &cfg).unwrap();
        let b = motif_sparsification(&g, &ms, &cfg).unwrap();
        prop_assert_eq!(&a.graph, &b.graph);
        prop_assert!(is_reweighted_subgraph(&g, &a.graph, keep_probability(3)));
        prop_assert!(a.stats.rounds_run <= a.stats.rounds);
        if scale == 1.0 {
            prop_assert_eq!(&a.graph, &g);
        }
    }

    #[test]
    fn sampled_error_never_exceeds_exhaustive(g in graph(10, Kind::Undirected), seed in 0u64..100) {
        let m = Motif::triangle(Kind::Undirected);
        let keep: Vec<bool> = (0..g.m()).map(|e| !(e as u64 ^ seed).is_multiple_of(4)).collect();
        let h = g.edge_subgraph(&keep);
        let full = max_cut_error(&g, &h, &m).unwrap().max_relative_error;
        let sampled = sampled_cut_error(&g, &h, &m, 64, seed).unwrap().max_relative_error;
        prop_assert!(sampled <= full);
    }
}
