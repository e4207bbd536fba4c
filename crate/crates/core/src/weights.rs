//! Per-edge motif weights `w_M(e) = Σ_{I ∋ e} w(I)`.
//!
//! [`motif_weights_naive`] sums over enumerated instances. [`motif_weights_fast`]
//! avoids enumeration: motif vertices are split into three consecutive parts of
//! sizes `k1 >= k2 >= k3` and every part becomes a set of ordered tuples of
//! distinct host vertices. A tuple carries the product of the host weights of
//! the motif edges inside its part, and a pair of disjoint tuples from different
//! parts carries the product of the motif edges between the parts. Weighted
//! triangles of this tripartite graph are then exactly the injective
//! homomorphisms of the motif, each of the `A` automorphic copies of an
//! instance once, and triangle weights come from `D W D W D` style products.

use alloc::vec::Vec;

use crate::enumerate::{automorphism_count, enumerate_instances};
use crate::graph::{Graph, Kind};
use crate::motif::{Motif, MotifInstance};
use crate::{Error, Result};

/// Default memory budget of the tuple graph, in bytes.
pub const DEFAULT_MEMORY_BUDGET: usize = 1 << 30;

/// Motif edge between two parts, by position inside the tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct CrossEdge {
    left: usize,
    right: usize,
    // Arc goes from the left tuple to the right tuple.
    forward: bool,
}

/// Tripartite tuple graph of a host graph and a motif with `r >= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaGraph {
    n: usize,
    part_sizes: [usize; 3],
    /// Flattened tuples of each part, lexicographic order.
    tuples: [Vec<usize>; 3],
    vertex_weight: [Vec<f64>; 3],
    // Dense cross-part weights for part pairs (0,1), (0,2), (1,2), row-major.
    edge_weight: [Vec<f64>; 3],
    internal: [Vec<(usize, usize)>; 3],
    cross: [Vec<CrossEdge>; 3],
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Part sizes for `r` motif vertices, larger parts first.
pub fn part_sizes(r: usize) -> [usize; 3] {
    let base = r / 3;
    let extra = r % 3;
    [base + usize::from(extra > 0), base + usize::from(extra > 1), base]
}

fn tuple_count(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n.saturating_sub(i)))
}

/// Bytes needed by [`build_sigma_graph`] and the triangle products for this input size.
pub fn sigma_memory_estimate(n: usize, r: usize) -> usize {
    let k = part_sizes(r);
    let counts = k.map(|ki| tuple_count(n, ki));
    let mut entries = 0usize;
    let mut largest = 0usize;
    for (i, j) in PAIRS {
        let e = counts[i].saturating_mul(counts[j]);
        entries = entries.saturating_add(e);
        largest = largest.max(e);
    }
    let tuples: usize = counts.iter().zip(k).map(|(c, ki)| c.saturating_mul(ki + 2)).fold(0, usize::saturating_add);
    entries.saturating_add(largest).saturating_add(tuples).saturating_mul(8)
}

fn all_tuples(n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(tuple_count(n, k) * k);
    let mut current = Vec::with_capacity(k);
    let mut used = alloc::vec![false; n];
    fn rec(n: usize, k: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<usize>) {
        if current.len() == k {
            out.extend_from_slice(current);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, k, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, k, &mut current, &mut used, &mut out);
    out
}

/// Dense host lookups: weight (0 when absent) and edge index.
struct HostTable {
    n: usize,
    weight: Vec<f64>,
    index: Vec<usize>,
}

impl HostTable {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut weight = alloc::vec![0.0; n * n];
        let mut index = alloc::vec![usize::MAX; n * n];
        for (i, e) in g.edges().iter().enumerate() {
            weight[e.u * n + e.v] = e.w;
            index[e.u * n + e.v] = i;
            if g.kind() == Kind::Undirected {
                weight[e.v * n + e.u] = e.w;
                index[e.v * n + e.u] = i;
            }
        }
        HostTable { n, weight, index }
    }

    fn w(&self, u: usize, v: usize) -> f64 {
        self.weight[u * self.n + v]
    }

    fn id(&self, u: usize, v: usize) -> usize {
        self.index[u * self.n + v]
    }
}

pub fn build_sigma_graph(g: &Graph, m: &Motif) -> Result<SigmaGraph> {
    build_sigma_graph_with_budget(g, m, DEFAULT_MEMORY_BUDGET)
}

pub fn build_sigma_graph_with_budget(g: &Graph, m: &Motif, budget: usize) -> Result<SigmaGraph> {
    if g.kind() != m.kind() {
        return Err(Error::KindMismatch);
    }
    if m.r() < 3 {
        return Err(Error::InvalidMotif("the tuple graph needs at least three motif vertices"));
    }
    let required = sigma_memory_estimate(g.n(), m.r());
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let host = HostTable::new(g);
    Ok(build(g.n(), m, &host))
}

fn build(n: usize, m: &Motif, host: &HostTable) -> SigmaGraph {
    let k = part_sizes(m.r());
    let offset = [0, k[0], k[0] + k[1]];
    let part_of = |a: usize| (0..3).rev().find(|&p| a >= offset[p]).unwrap();

    let mut internal: [Vec<(usize, usize)>; 3] = Default::default();
    let mut cross: [Vec<CrossEdge>; 3] = Default::default();
    for &(a, b) in m.edges() {
        let (pa, pb) = (part_of(a), part_of(b));
        if pa == pb {
            internal[pa].push((a - offset[pa], b - offset[pb]));
        } else {
            let (lo, hi, forward) = if pa < pb { (a, b, true) } else { (b, a, false) };
            let (plo, phi) = (part_of(lo), part_of(hi));
            let slot = PAIRS.iter().position(|&pair| pair == (plo, phi)).unwrap();
            cross[slot].push(CrossEdge { left: lo - offset[plo], right: hi - offset[phi], forward });
        }
    }

    let tuples = k.map(|ki| all_tuples(n, ki));
    let vertex_weight: [Vec<f64>; 3] = core::array::from_fn(|p| {
        tuples[p]
            .chunks(k[p].max(1))
            .map(|t| internal[p].iter().map(|&(a, b)| host.w(t[a], t[b])).product())
            .collect()
    });

    let edge_weight: [Vec<f64>; 3] = core::array::from_fn(|slot| {
        let (i, j) = PAIRS[slot];
        let (ki, kj) = (k[i], k[j]);
        let rows = vertex_weight[i].len();
        let cols = vertex_weight[j].len();
        let mut out = alloc::vec![0.0; rows * cols];
        for s in 0..rows {
            if vertex_weight[i][s] == 0.0 {
                continue;
            }
            let ts = &tuples[i][s * ki..(s + 1) * ki];
            for t in 0..cols {
                if vertex_weight[j][t] == 0.0 {
                    continue;
                }
                let tt = &tuples[j][t * kj..(t + 1) * kj];
                if ts.iter().any(|v| tt.contains(v)) {
                    continue;
                }
                out[s * cols + t] = cross[slot]
                    .iter()
                    .map(|c| {
                        let (x, y) = (ts[c.left], tt[c.right]);
                        if c.forward { host.w(x, y) } else { host.w(y, x) }
                    })
                    .product();
            }
        }
        out
    });

    SigmaGraph { n, part_sizes: k, tuples, vertex_weight, edge_weight, internal, cross }
}

/// Triangle weight through every tuple-graph vertex and edge.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleWeights {
    /// Per part, per tuple.
    pub vertex: [Vec<f64>; 3],
    /// Per part pair `(0,1)`, `(0,2)`, `(1,2)`, row-major.
    pub edge: [Vec<f64>; 3],
}

impl TriangleWeights {
    /// Total triangle weight; each triangle has exactly one `(0,1)` edge.
    pub fn total(&self) -> f64 {
        self.edge[0].iter().sum()
    }
}

impl SigmaGraph {
    /// Host vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn part_sizes(&self) -> [usize; 3] {
        self.part_sizes
    }

    /// Number of tuples in part `p`.
    pub fn part_len(&self, p: usize) -> usize {
        self.vertex_weight[p].len()
    }

    pub fn tuple(&self, p: usize, index: usize) -> &[usize] {
        let k = self.part_sizes[p];
        &self.tuples[p][index * k..(index + 1) * k]
    }

    pub fn vertex_weight(&self, p: usize, index: usize) -> f64 {
        self.vertex_weight[p][index]
    }

    /// Weight of the edge between tuple `a` of part `p` and tuple `b` of part `q`, `p < q`.
    pub fn edge_weight(&self, p: usize, a: usize, q: usize, b: usize) -> f64 {
        let slot = PAIRS.iter().position(|&pair| pair == (p, q)).expect("parts p < q");
        self.edge_weight[slot][a * self.part_len(q) + b]
    }

    /// Weighted triangles through each vertex and edge.
    pub fn triangle_weights(&self) -> TriangleWeights {
        let [n0, n1, n2] = [0, 1, 2].map(|p| self.part_len(p));
        let [d0, d1, d2] = [0, 1, 2].map(|p| &self.vertex_weight[p]);
        let [a, b, c] = [0, 1, 2].map(|s| &self.edge_weight[s]);

        let mut c_t = alloc::vec![0.0; n2 * n1];
        for t in 0..n1 {
            for x in 0..n2 {
                c_t[x * n1 + t] = c[t * n2 + x];
            }
        }
        // (0,1): a ∘ (D0 (B D2 Cᵀ) D1)
        let mut e01 = alloc::vec![0.0; n0 * n1];
        for s in 0..n0 {
            let row = &mut e01[s * n1..(s + 1) * n1];
            for x in 0..n2 {
                let f = b[s * n2 + x] * d2[x];
                if f != 0.0 {
                    axpy(row, f, &c_t[x * n1..(x + 1) * n1]);
                }
            }
            for t in 0..n1 {
                row[t] *= a[s * n1 + t] * d0[s] * d1[t];
            }
        }
        // (0,2): b ∘ (D0 (A D1 C) D2)
        let mut e02 = alloc::vec![0.0; n0 * n2];
        for s in 0..n0 {
            let row = &mut e02[s * n2..(s + 1) * n2];
            for t in 0..n1 {
                let f = a[s * n1 + t] * d1[t];
                if f != 0.0 {
                    axpy(row, f, &c[t * n2..(t + 1) * n2]);
                }
            }
            for x in 0..n2 {
                row[x] *= b[s * n2 + x] * d0[s] * d2[x];
            }
        }
        // (1,2): c ∘ (D1 (Aᵀ D0 B) D2)
        let mut e12 = alloc::vec![0.0; n1 * n2];
        for s in 0..n0 {
            if d0[s] == 0.0 {
                continue;
            }
            let brow = &b[s * n2..(s + 1) * n2];
            for t in 0..n1 {
                let f = a[s * n1 + t] * d0[s];
                if f != 0.0 {
                    axpy(&mut e12[t * n2..(t + 1) * n2], f, brow);
                }
            }
        }
        for t in 0..n1 {
            for x in 0..n2 {
                e12[t * n2 + x] *= c[t * n2 + x] * d1[t] * d2[x];
            }
        }

        let mut v0 = alloc::vec![0.0; n0];
        let mut v1 = alloc::vec![0.0; n1];
        let mut v2 = alloc::vec![0.0; n2];
        for s in 0..n0 {
            for t in 0..n1 {
                v0[s] += e01[s * n1 + t];
                v1[t] += e01[s * n1 + t];
            }
            for x in 0..n2 {
                v0[s] += e02[s * n2 + x];
                v2[x] += e02[s * n2 + x];
            }
        }
        for t in 0..n1 {
            for x in 0..n2 {
                v1[t] += e12[t * n2 + x];
                v2[x] += e12[t * n2 + x];
            }
        }
        for list in [&mut v0, &mut v1, &mut v2] {
            for v in list.iter_mut() {
                *v *= 0.5;
            }
        }
        TriangleWeights { vertex: [v0, v1, v2], edge: [e01, e02, e12] }
    }
}

fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Motif weights from enumerated instances.
pub fn motif_weights_naive(g: &Graph, m: &Motif) -> Result<Vec<f64>> {
    let instances = enumerate_instances(g, m)?;
    Ok(motif_weights_from_instances(g, &instances))
}

/// Per-edge sums of the weights of the given instances (indexed like `g.edges()`).
pub fn motif_weights_from_instances(g: &Graph, instances: &[MotifInstance]) -> Vec<f64> {
    let mut out = alloc::vec![0.0; g.m()];
    for inst in instances {
        for &e in &inst.edge_ids {
            out[e] += inst.weight;
        }
    }
    out
}

/// Motif weights through the tuple graph, indexed like `g.edges()`.
/// Single-edge motifs are summed directly.
pub fn motif_weights_fast(g: &Graph, m: &Motif) -> Result<Vec<f64>> {
    motif_weights_fast_with_budget(g, m, DEFAULT_MEMORY_BUDGET)
}

pub fn motif_weights_fast_with_budget(g: &Graph, m: &Motif, budget: usize) -> Result<Vec<f64>> {
    if g.kind() != m.kind() {
        return Err(Error::KindMismatch);
    }
    if m.r() == 2 {
        return motif_weights_naive(g, m);
    }
    let sigma = build_sigma_graph_with_budget(g, m, budget)?;
    let host = HostTable::new(g);
    let automorphisms = automorphism_count(m)? as f64;
    let tri = sigma.triangle_weights();
    let mut out = alloc::vec![0.0; g.m()];

    for p in 0..3 {
        for (idx, &w) in tri.vertex[p].iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            let t = sigma.tuple(p, idx);
            for &(a, b) in &sigma.internal[p] {
                out[host.id(t[a], t[b])] += w;
            }
        }
    }
    for (slot, &(p, q)) in PAIRS.iter().enumerate() {
        let cols = sigma.part_len(q);
        for (idx, &w) in tri.edge[slot].iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            let (s, t) = (sigma.tuple(p, idx / cols), sigma.tuple(q, idx % cols));
            for c in &sigma.cross[slot] {
                let (x, y) = (s[c.left], t[c.right]);
                let id = if c.forward { host.id(x, y) } else { host.id(y, x) };
                out[id] += w;
            }
        }
    }
    for w in &mut out {
        *w /= automorphisms;
    }
    Ok(out)
}

/// The motif-weighted graph `G_M`: undirected, edge `{u, v}` weighted by the summed
/// motif weights of the host edges between `u` and `v`; zero-weight edges are dropped.
pub fn motif_weighted_graph(g: &Graph, weights: &[f64]) -> Graph {
    let mut merged: alloc::collections::BTreeMap<(usize, usize), f64> = alloc::collections::BTreeMap::new();
    for (e, &w) in g.edges().iter().zip(weights) {
        if w > 0.0 {
            let key = if e.u < e.v { (e.u, e.v) } else { (e.v, e.u) };
            *merged.entry(key).or_insert(0.0) += w;
        }
    }
    Graph::new(g.n(), Kind::Undirected, merged.into_iter().map(|((u, v), w)| (u, v, w)))
        .expect("merged motif weights form a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use alloc::vec;

    #[test]
    fn part_sizes_are_balanced() {
        assert_eq!(part_sizes(3), [1, 1, 1]);
        assert_eq!(part_sizes(4), [2, 1, 1]);
        assert_eq!(part_sizes(5), [2, 2, 1]);
        assert_eq!(part_sizes(6), [2, 2, 2]);
        assert_eq!(part_sizes(7), [3, 2, 2]);
    }

    #[test]
    fn k4_triangle_tuple_graph() {
        let g = generate::clique(4);
        let s = build_sigma_graph(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        for p in 0..3 {
            assert_eq!(s.part_len(p), 4);
            assert!((0..4).all(|i| s.vertex_weight(p, i) == 1.0));
        }
        assert_eq!(s.edge_weight(0, 0, 1, 0), 0.0);
        assert_eq!(s.edge_weight(0, 0, 1, 1), 1.0);
        // 24 injective homomorphisms, 4 instances, 6 automorphisms.
        assert_eq!(s.triangle_weights().total(), 24.0);
    }

    #[test]
    fn four_cycle_part_sizes() {
        let g = generate::clique(5);
        let s = build_sigma_graph(&g, &Motif::cycle(4, Kind::Undirected).unwrap()).unwrap();
        assert_eq!([s.part_len(0), s.part_len(1), s.part_len(2)], [20, 5, 5]);
    }

    #[test]
    fn missing_host_edge_removes_sigma_edge() {
        let g = Graph::new(3, Kind::Undirected, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let s = build_sigma_graph(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        assert_eq!(s.edge_weight(0, 0, 1, 2), 0.0);
        assert_eq!(s.edge_weight(0, 0, 1, 1), 1.0);
        assert_eq!(s.triangle_weights().total(), 0.0);
    }

    #[test]
    fn k4_weights() {
        let g = generate::clique(4);
        let tri = motif_weights_fast(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        assert_eq!(tri, vec![2.0; 6]);
        let path = Motif::path(2, Kind::Undirected).unwrap();
        assert_eq!(motif_weights_fast(&g, &path).unwrap(), vec![4.0; 6]);
        assert_eq!(motif_weights_naive(&g, &path).unwrap(), vec![4.0; 6]);
    }

    #[test]
    fn weighted_triangle() {
        let g = Graph::new(3, Kind::Undirected, [(0, 1, 2.0), (1, 2, 3.0), (0, 2, 5.0)]).unwrap();
        let m = Motif::triangle(Kind::Undirected);
        assert_eq!(motif_weights_naive(&g, &m).unwrap(), vec![30.0; 3]);
        assert_eq!(motif_weights_fast(&g, &m).unwrap(), vec![30.0; 3]);
    }

    #[test]
    fn no_instances_gives_zero() {
        let g = Graph::new(4, Kind::Undirected, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let m = Motif::triangle(Kind::Undirected);
        assert_eq!(motif_weights_fast(&g, &m).unwrap(), vec![0.0; 2]);
    }

    #[test]
    fn edge_motif_weights_are_edge_weights() {
        let g = Graph::new(3, Kind::Directed, [(0, 1, 2.5), (1, 2, 4.0)]).unwrap();
        assert_eq!(motif_weights_fast(&g, &Motif::edge(Kind::Directed)).unwrap(), vec![2.5, 4.0]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = generate::clique(8);
        let m = Motif::clique(4, Kind::Undirected).unwrap();
        assert!(matches!(
            motif_weights_fast_with_budget(&g, &m, 1024),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn motif_weighted_graph_sums_directed_pairs() {
        let g = Graph::new(3, Kind::Directed, [(0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0)]).unwrap();
        let gm = motif_weighted_graph(&g, &[2.0, 3.0, 0.0]);
        assert_eq!(gm.m(), 1);
        assert_eq!(gm.weight(0, 1), Some(5.0));
    }
}
