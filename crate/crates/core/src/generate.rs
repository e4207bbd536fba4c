//! Graph generators used by tests, benchmarks and the command line.

use alloc::vec::Vec;

use crate::graph::{Graph, Kind};
use crate::sampling;
use crate::{Error, Result};

/// Unit-weight undirected clique.
pub fn clique(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, 1.0)));
    Graph::new(n, Kind::Undirected, edges).expect("clique edges are valid")
}

/// Erdős–Rényi `G(n, p)` with unit weights.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_graph(n, p, Kind::Undirected, (1.0, 1.0), seed)
}

/// `G(n, p)` of the given kind with weights uniform in `[lo, hi]`. Directed graphs
/// draw each ordered pair independently.
pub fn random_graph(n: usize, p: f64, kind: Kind, (lo, hi): (f64, f64), seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument("edge probability must lie in [0, 1]"));
    }
    if !(lo > 0.0 && hi >= lo) {
        return Err(Error::InvalidArgument("weight range must be positive and ordered"));
    }
    let mut rng = sampling::rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let wanted = match kind {
                Kind::Undirected => u < v,
                Kind::Directed => u != v,
            };
            if !wanted {
                continue;
            }
            if sampling::next_unit(&mut rng) < p {
                let w = if hi > lo { lo + (hi - lo) * sampling::next_unit(&mut rng) } else { lo };
                edges.push((u, v, w));
            }
        }
    }
    Graph::new(n, kind, edges)
}

/// `G(n, p)` with integer weights drawn uniformly from `1..=max_weight`.
pub fn random_integer_graph(n: usize, p: f64, kind: Kind, max_weight: u32, seed: u64) -> Result<Graph> {
    let g = random_graph(n, p, kind, (1.0, 1.0), seed)?;
    let mut rng = sampling::rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let weights: Vec<f64> = g
        .edges()
        .iter()
        .map(|_| (1 + (sampling::next_unit(&mut rng) * f64::from(max_weight)) as u32).min(max_weight) as f64)
        .collect();
    g.reweighted(&weights)
}

/// Unit clique on `n >= 6` vertices minus the triangle on the special vertices 0, 1, 2.
pub fn delta_minus(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::InvalidArgument("delta-minus needs at least 6 vertices"));
    }
    let special = |u: usize, v: usize| u < 3 && v < 3;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !special(u, v));
    Graph::new(n, Kind::Undirected, edges.map(|(u, v)| (u, v, 1.0)))
}

/// Unit clique minus edge `{0, 1}` together with its sparse stand-in: edge `{0, 1}`
/// of weight `n²` plus edges `{0, x}` of weight `n⁻²` for every other `x`.
pub fn clique_minus_edge_pair(n: usize) -> Result<(Graph, Graph)> {
    if n < 5 {
        return Err(Error::InvalidArgument("clique-minus-edge needs at least 5 vertices"));
    }
    let g = Graph::new(
        n,
        Kind::Undirected,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, 1.0))).filter(|&(u, v, _)| (u, v) != (0, 1)),
    )?;
    let nf = n as f64;
    let mut sparse = alloc::vec![(0, 1, nf * nf)];
    sparse.extend((2..n).map(|x| (0, x, 1.0 / (nf * nf))));
    let g_hat = Graph::new(n, Kind::Undirected, sparse)?;
    Ok((g, g_hat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_edge_counts() {
        assert_eq!(clique(4).m(), 6);
        assert_eq!(delta_minus(6).unwrap().m(), 12);
        assert_eq!(delta_minus(10).unwrap().m(), 42);
        assert!(delta_minus(5).is_err());
        let (g, h) = clique_minus_edge_pair(10).unwrap();
        assert_eq!(g.m(), 44);
        assert_eq!(h.m(), 9);
    }

    #[test]
    fn gnp_is_seeded() {
        let a = gnp(16, 0.5, 7).unwrap();
        let b = gnp(16, 0.5, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gnp(16, 0.5, 8).unwrap());
    }

    #[test]
    fn integer_weights_in_range() {
        let g = random_integer_graph(8, 0.7, Kind::Undirected, 3, 1).unwrap();
        assert!(g.edges().iter().all(|e| [1.0, 2.0, 3.0].contains(&e.w)));
    }
}
