//! Frozen values from independent brute force, and closed forms.

use motifcut_core::enumerate::{automorphism_count, enumerate_induced_instances, enumerate_instances};
use motifcut_core::graph::{enumerate_cuts, motif_cut_value};
use motifcut_core::hypergraph::{build_motif_hypergraph, exact_strengths, hypergraph_min_cut};
use motifcut_core::sparsify::{eps_prime, keep_probability, round_count, SparsifyConfig};
use motifcut_core::verify::{brute_force_strengths, clique_minus_edge_example, max_cut_error, relative_error};
use motifcut_core::weights::{motif_weights_fast, motif_weights_naive};
use motifcut_core::{connectivity, generate, Cut, Graph, Kind, Motif};

/// Injective maps of the motif vertices into `g` that send every motif edge to an edge.
fn homomorphisms(g: &Graph, m: &Motif) -> u64 {
    fn extend(g: &Graph, m: &Motif, image: &mut Vec<usize>, count: &mut u64) {
        if image.len() == m.r() {
            let ok = m.edges().iter().all(|&(a, b)| g.edge_index(image[a], image[b]).is_some());
            *count += u64::from(ok);
            return;
        }
        for v in 0..g.n() {
            if !image.contains(&v) {
                image.push(v);
                extend(g, m, image, count);
                image.pop();
            }
        }
    }
    let mut count = 0;
    extend(g, m, &mut Vec::new(), &mut count);
    count
}

/// Induced 2-path weight crossing `side`, from vertex triples directly.
fn induced_path_cut(g: &Graph, side: &[bool]) -> f64 {
    let n = g.n();
    let mut total = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = [g.weight(a, b), g.weight(b, c), g.weight(a, c)];
                let present: Vec<f64> = e.iter().flatten().copied().collect();
                let crosses = !(side[a] == side[b] && side[b] == side[c]);
                if present.len() == 2 && crosses {
                    total += present[0] * present[1];
                }
            }
        }
    }
    total
}

#[test]
fn k4_triangle_cut_values() {
    let k4 = generate::clique(4);
    let list = enumerate_instances(&k4, &Motif::triangle(Kind::Undirected)).unwrap();
    assert_eq!(list.len(), 4);
    assert_eq!(motif_cut_value(&list, &Cut::new(4, vec![0]).unwrap()), 3.0);
    assert_eq!(motif_cut_value(&list, &Cut::new(4, vec![0, 1]).unwrap()), 4.0);
}

#[test]
fn clique_instance_counts() {
    for n in 4..=7usize {
        let k = generate::clique(n);
        let c3 = n * (n - 1) * (n - 2) / 6;
        assert_eq!(enumerate_instances(&k, &Motif::triangle(Kind::Undirected)).unwrap().len(), c3);
        assert_eq!(enumerate_instances(&k, &Motif::path(2, Kind::Undirected).unwrap()).unwrap().len(), 3 * c3);
        assert_eq!(enumerate_instances(&k, &Motif::cycle(4, Kind::Undirected).unwrap()).unwrap().len(), 3 * c3 * (n - 3) / 4);
    }
}

#[test]
fn instance_count_times_automorphisms_is_homomorphism_count() {
    for seed in 0..12u64 {
        let kind = if seed % 2 == 0 { Kind::Undirected } else { Kind::Directed };
        let g = generate::random_graph(6 + (seed % 3) as usize, 0.55, kind, (1.0, 1.0), seed).unwrap();
        let mut motifs = vec![
            Motif::triangle(kind),
            Motif::path(2, kind).unwrap(),
            Motif::path(3, kind).unwrap(),
            Motif::cycle(4, kind).unwrap(),
        ];
        if kind == Kind::Directed {
            motifs.push(Motif::cycle(3, kind).unwrap());
        }
        for m in &motifs {
            let dedup = enumerate_instances(&g, m).unwrap().len() as u64;
            assert_eq!(dedup * automorphism_count(m).unwrap(), homomorphisms(&g, m), "seed {seed}");
        }
    }
}

#[test]
fn motif_weights_of_small_graphs() {
    let k4 = generate::clique(4);
    assert_eq!(motif_weights_fast(&k4, &Motif::triangle(Kind::Undirected)).unwrap(), vec![2.0; 6]);
    let tri = Graph::new(3, Kind::Undirected, [(0, 1, 2.0), (1, 2, 3.0), (0, 2, 5.0)]).unwrap();
    assert_eq!(motif_weights_fast(&tri, &Motif::triangle(Kind::Undirected)).unwrap(), vec![30.0; 3]);
    assert_eq!(motif_weights_naive(&tri, &Motif::triangle(Kind::Undirected)).unwrap(), vec![30.0; 3]);
    // Each edge of K4 lies on 4 two-paths.
    assert_eq!(motif_weights_fast(&k4, &Motif::path(2, Kind::Undirected).unwrap()).unwrap(), vec![4.0; 6]);
}

#[test]
fn delta_minus_induced_two_paths() {
    let path = Motif::path(2, Kind::Undirected).unwrap();
    for n in [8usize, 10, 12, 16] {
        let g = generate::delta_minus(n).unwrap();
        assert_eq!(g.m(), n * (n - 1) / 2 - 3);
        let list = enumerate_induced_instances(&g, &path).unwrap();
        assert_eq!(list.len(), 3 * (n - 3));
        // Every induced 2-path has its endpoints among the special vertices.
        assert!(list.iter().all(|i| i.vertex_map.iter().filter(|&&v| v < 3).count() == 2));
    }
    let ten = enumerate_induced_instances(&generate::delta_minus(10).unwrap(), &path).unwrap();
    assert_eq!(ten.len(), 21);
}

#[test]
fn clique_minus_edge_example_against_triples() {
    for n in [8usize, 10, 12] {
        let (g, g_hat, report) = clique_minus_edge_example(n).unwrap();
        assert_eq!(g_hat.m(), n - 1);
        let path = Motif::path(2, Kind::Undirected).unwrap();
        assert_eq!(enumerate_induced_instances(&g, &path).unwrap().len(), n - 2);
        let mut worst = 0.0f64;
        for cut in enumerate_cuts(n, 20).unwrap() {
            let side = cut.membership(n);
            worst = worst.max(relative_error(induced_path_cut(&g, &side), induced_path_cut(&g_hat, &side)));
        }
        assert!((report.max_relative_error - worst).abs() <= 1e-12, "n = {n}");
        assert!(worst <= (n as f64).powi(-3));
    }
    let (_, _, eight) = clique_minus_edge_example(8).unwrap();
    assert!((eight.max_relative_error - 0.001_220_703_125).abs() < 1e-15);
}

#[test]
fn exhaustive_error_matches_direct_enumeration() {
    let m = Motif::triangle(Kind::Undirected);
    for seed in 0..6u64 {
        let g = generate::random_graph(7, 0.7, Kind::Undirected, (0.5, 2.0), seed).unwrap();
        let keep: Vec<bool> = (0..g.m()).map(|e| !(e as u64 + seed).is_multiple_of(3)).collect();
        let h = g.edge_subgraph(&keep);
        let (a, b) = (enumerate_instances(&g, &m).unwrap(), enumerate_instances(&h, &m).unwrap());
        let worst = enumerate_cuts(7, 20)
            .unwrap()
            .map(|c| relative_error(motif_cut_value(&a, &c), motif_cut_value(&b, &c)))
            .fold(0.0, f64::max);
        assert_eq!(max_cut_error(&g, &h, &m).unwrap().max_relative_error, worst);
    }
}

#[test]
fn relative_error_cases() {
    assert_eq!(relative_error(2.0, 3.0), 0.5);
    assert_eq!(relative_error(0.0, 0.0), 0.0);
    assert_eq!(relative_error(0.0, 1.0), f64::INFINITY);
    assert_eq!(relative_error(4.0, 0.0), 1.0);
}

#[test]
fn hypergraph_cuts_and_strengths_of_k4() {
    let k4 = generate::clique(4);
    let list = enumerate_instances(&k4, &Motif::triangle(Kind::Undirected)).unwrap();
    let h = build_motif_hypergraph(&k4, &list);
    let (_, value) = hypergraph_min_cut(&h, &[0, 1, 2, 3]).unwrap();
    assert_eq!(value, 3.0);
    assert_eq!(exact_strengths(&h).unwrap().hyperedge, vec![3.0; 4]);
    assert_eq!(brute_force_strengths(&h).unwrap(), vec![3.0; 4]);
}

#[test]
fn max_flow_small_cases() {
    assert_eq!(connectivity::max_flow(&generate::clique(4), 0, 3).unwrap(), 3.0);
    let path = Graph::new(3, Kind::Undirected, [(0, 1, 2.0), (1, 2, 0.5)]).unwrap();
    assert_eq!(connectivity::max_flow(&path, 0, 2).unwrap(), 0.5);
    assert!(connectivity::max_flow(&path, 1, 1).is_err());
}

#[test]
fn schedule_formulas() {
    let cfg = SparsifyConfig::default();
    assert!((eps_prime(&cfg, 16, 3) - 1.0 / 1200.0).abs() < 1e-15);
    assert_eq!(round_count(&cfg, 16, 3), 240);
    assert!((keep_probability(3) - 2f64.powf(-1.0 / 6.0)).abs() < 1e-15);
    let fixed = SparsifyConfig { rounds_override: Some(7), ..cfg };
    assert_eq!(round_count(&fixed, 16, 3), 7);
}
