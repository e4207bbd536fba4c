//! Weighted graphs, cuts and motif cut values.

use alloc::vec::Vec;

use crate::motif::MotifInstance;
use crate::{Error, Result};

/// Default upper bound on `n` for exhaustive cut enumeration.
pub const DEFAULT_CUT_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Directed,
    Undirected,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// A weighted graph on vertices `0..n` with strictly positive edge weights.
///
/// Edges are kept sorted by `(u, v)`. Undirected edges are stored once with
/// `u < v`; directed edges `(u, v)` and `(v, u)` are distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    kind: Kind,
    edges: Vec<Edge>,
    // Directed: out-arcs. Undirected: all incident edges. Sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    // Neighbors ignoring direction, sorted and deduplicated.
    und: Vec<Vec<usize>>,
    in_deg: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates, out-of-range vertices
    /// and non-positive or non-finite weights.
    pub fn new(n: usize, kind: Kind, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v, w) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::NonPositiveWeight { u, v, weight: w });
            }
            let (u, v) = match kind {
                Kind::Undirected if u > v => (v, u),
                _ => (u, v),
            };
            list.push(Edge { u, v, w });
        }
        list.sort_by_key(|a| (a.u, a.v));
        for pair in list.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::DuplicateEdge { u: pair[0].u, v: pair[0].v });
            }
        }
        Ok(Self::from_sorted(n, kind, list))
    }

    /// Builds a graph from edges, silently dropping those with zero weight.
    pub fn with_dropped_zeros(
        n: usize,
        kind: Kind,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        Self::new(n, kind, edges.into_iter().filter(|e| e.2 != 0.0))
    }

    pub fn empty(n: usize, kind: Kind) -> Self {
        Self::from_sorted(n, kind, Vec::new())
    }

    fn from_sorted(n: usize, kind: Kind, edges: Vec<Edge>) -> Self {
        let mut adj = alloc::vec![Vec::new(); n];
        let mut und = alloc::vec![Vec::new(); n];
        let mut in_deg = alloc::vec![0; n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            if kind == Kind::Undirected {
                adj[e.v].push((e.u, i));
            }
            und[e.u].push(e.v);
            und[e.v].push(e.u);
            in_deg[e.v] += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for list in &mut und {
            list.sort_unstable();
            list.dedup();
        }
        Graph { n, kind, edges, adj, und, in_deg }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_directed(&self) -> bool {
        self.kind == Kind::Directed
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Index of edge `(u, v)`; for undirected graphs the orientation is ignored.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by(|probe| probe.0.cmp(&v)).ok().map(|at| list[at].1)
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.edge_index(u, v).map(|i| self.edges[i].w)
    }

    /// Neighbors of `v` ignoring edge direction.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.und[v]
    }

    /// Out-neighbors for directed graphs, all neighbors for undirected graphs.
    pub fn out_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        match self.kind {
            Kind::Directed => self.adj[v].len(),
            Kind::Undirected => self.und[v].len(),
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        match self.kind {
            Kind::Directed => self.in_deg[v],
            Kind::Undirected => self.und[v].len(),
        }
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.w).reduce(f64::min)
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.w).reduce(f64::max)
    }

    /// Same edge set with new weights (indexed like [`Graph::edges`]); zero weights drop the edge.
    pub fn reweighted(&self, weights: &[f64]) -> Result<Graph> {
        if weights.len() != self.edges.len() {
            return Err(Error::InvalidArgument("weight vector length differs from edge count"));
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .zip(weights)
            .filter(|(_, &w)| w != 0.0)
            .map(|(e, &w)| Edge { u: e.u, v: e.v, w })
            .collect();
        if let Some(e) = edges.iter().find(|e| !(e.w > 0.0) || !e.w.is_finite()) {
            return Err(Error::NonPositiveWeight { u: e.u, v: e.v, weight: e.w });
        }
        Ok(Self::from_sorted(self.n, self.kind, edges))
    }

    /// Subgraph keeping the edges whose flag is set.
    pub fn edge_subgraph(&self, keep: &[bool]) -> Graph {
        let edges = self
            .edges
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(e, _)| *e)
            .collect();
        Self::from_sorted(self.n, self.kind, edges)
    }

    /// Whether `other` is a subgraph of `self` on the same vertex set (weights ignored).
    pub fn contains_edges_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.kind == other.kind
            && other.edges.iter().all(|e| self.edge_index(e.u, e.v).is_some())
    }

    /// Number of weakly connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut seen = alloc::vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &u in &self.und[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}

/// Bidirected encoding of an undirected graph: each edge `{u, v}` of weight `w`
/// becomes arcs `(u, v)` and `(v, u)` of weight `sqrt(w)`.
pub fn encode_undirected(g: &Graph) -> Result<Graph> {
    if g.is_directed() {
        return Err(Error::KindMismatch);
    }
    let arcs = g.edges.iter().flat_map(|e| {
        let w = libm::sqrt(e.w);
        [(e.u, e.v, w), (e.v, e.u, w)]
    });
    Graph::new(g.n, Kind::Directed, arcs)
}

/// One side `S` of a cut `(S, V \ S)`, stored as a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    side: Vec<usize>,
}

impl Cut {
    /// Checks `∅ ⊊ S ⊊ V`.
    pub fn new(n: usize, mut side: Vec<usize>) -> Result<Self> {
        side.sort_unstable();
        side.dedup();
        if side.is_empty() || side.len() >= n || side.iter().any(|&v| v >= n) {
            return Err(Error::InvalidCut);
        }
        Ok(Cut { side })
    }

    /// Cut from a bitmask over vertices `0..n` (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new(n, (0..n).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub(crate) fn from_sorted_unchecked(side: Vec<usize>) -> Self {
        Cut { side }
    }

    pub fn side(&self) -> &[usize] {
        &self.side
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side.binary_search(&v).is_ok()
    }

    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut flags = alloc::vec![false; n];
        for &v in &self.side {
            flags[v] = true;
        }
        flags
    }

    /// Same cut with the side holding vertex 0.
    pub fn canonical(&self, n: usize) -> Cut {
        if self.contains(0) {
            self.clone()
        } else {
            let flags = self.membership(n);
            Cut { side: (0..n).filter(|&v| !flags[v]).collect() }
        }
    }

    /// Whether the vertex set has members on both sides.
    pub fn separates(&self, vertices: &[usize]) -> bool {
        let mut inside = false;
        let mut outside = false;
        for &v in vertices {
            if self.contains(v) {
                inside = true;
            } else {
                outside = true;
            }
        }
        inside && outside
    }
}

/// Iterator over the `2^(n-1) - 1` proper cuts, each with vertex 0 in `S`.
#[derive(Debug, Clone)]
pub struct CutIter {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for CutIter {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next << 1 | 1;
        self.next += 1;
        Some(Cut { side: (0..self.n).filter(|&v| mask >> v & 1 == 1).collect() })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CutIter {}

/// All proper cuts of `0..n`, canonicalized with `0 ∈ S`.
pub fn enumerate_cuts(n: usize, limit: usize) -> Result<CutIter> {
    if n > limit || n > 63 {
        return Err(Error::CutLimit { n, limit });
    }
    let end = if n == 0 { 0 } else { (1u64 << (n - 1)) - 1 };
    Ok(CutIter { n, next: 0, end })
}

/// Recomputes `∏ w(e)` over the instance edges in `g`.
pub fn instance_weight(g: &Graph, inst: &MotifInstance) -> Result<f64> {
    inst.edges.iter().try_fold(1.0, |acc, &(u, v)| {
        g.weight(u, v).map(|w| acc * w).ok_or(Error::StaleInstance { u, v })
    })
}

/// Total weight of instances with vertices on both sides of the cut.
pub fn motif_cut_value(instances: &[MotifInstance], cut: &Cut) -> f64 {
    instances
        .iter()
        .filter(|inst| cut.separates(&inst.vertex_map))
        .map(|inst| inst.weight)
        .sum()
}
