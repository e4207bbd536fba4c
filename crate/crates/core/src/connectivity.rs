//! Maximum flow and flow-equivalent trees on undirected weighted graphs.
//!
//! [`FlowTree`] is built with Gusfield's method: `n - 1` maximum flow calls, no
//! contraction. The minimum `u`–`v` cut of the graph equals the lightest edge
//! on the tree path between `u` and `v`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: f64,
    // Index of the reverse arc.
    rev: usize,
}

/// Residual network for repeated max-flow calls on one undirected graph.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    capacity: Vec<Vec<f64>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
    eps: f64,
}

impl FlowNetwork {
    /// Network of an undirected graph; a directed graph is read as undirected, parallel pairs summed.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut arcs: Vec<Vec<Arc>> = alloc::vec![Vec::new(); n];
        for e in g.edges() {
            let (ru, rv) = (arcs[e.v].len(), arcs[e.u].len());
            arcs[e.u].push(Arc { to: e.v, cap: e.w, rev: ru });
            arcs[e.v].push(Arc { to: e.u, cap: e.w, rev: rv });
        }
        let capacity = arcs.iter().map(|list| list.iter().map(|a| a.cap).collect()).collect();
        let eps = g.max_weight().unwrap_or(0.0) * 1e-12;
        FlowNetwork { arcs, capacity, level: alloc::vec![0; n], cursor: alloc::vec![0; n], eps }
    }

    fn reset(&mut self) {
        for (list, caps) in self.arcs.iter_mut().zip(&self.capacity) {
            for (a, &c) in list.iter_mut().zip(caps) {
                a.cap = c;
            }
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > self.eps && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: f64) -> f64 {
        if v == t {
            return pushed;
        }
        while self.cursor[v] < self.arcs[v].len() {
            let i = self.cursor[v];
            let Arc { to, cap, rev } = self.arcs[v][i];
            if cap > self.eps && self.level[to] == self.level[v] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0.0 {
                    self.arcs[v][i].cap -= got;
                    self.arcs[to][rev].cap += got;
                    return got;
                }
            }
            self.cursor[v] += 1;
        }
        0.0
    }

    /// Maximum `s`–`t` flow value and the source side of a minimum cut.
    pub fn max_flow(&mut self, s: usize, t: usize) -> (f64, Vec<bool>) {
        self.reset();
        let mut total = 0.0;
        if s != t {
            while self.bfs(s, t) {
                self.cursor.fill(0);
                loop {
                    let f = self.dfs(s, t, f64::INFINITY);
                    if f <= 0.0 {
                        break;
                    }
                    total += f;
                }
            }
        }
        self.bfs(s, t);
        let side = self.level.iter().map(|&l| l >= 0).collect();
        (total, side)
    }
}

/// Maximum `s`–`t` flow of an undirected graph.
pub fn max_flow(g: &Graph, s: usize, t: usize) -> Result<f64> {
    if s >= g.n() || t >= g.n() || s == t {
        return Err(Error::InvalidArgument("max flow needs two distinct vertices in range"));
    }
    Ok(FlowNetwork::new(g).max_flow(s, t).0)
}

/// Flow-equivalent tree: `parent[v]` and the connecting edge weight for `v >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowTree {
    parent: Vec<usize>,
    weight: Vec<f64>,
}

impl FlowTree {
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let mut parent = alloc::vec![0usize; n];
        let mut weight = alloc::vec![0.0; n];
        let mut net = FlowNetwork::new(g);
        for s in 1..n {
            let t = parent[s];
            let (value, side) = net.max_flow(s, t);
            weight[s] = value;
            for i in s + 1..n {
                if side[i] && parent[i] == t {
                    parent[i] = s;
                }
            }
        }
        FlowTree { parent, weight }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn edge_weight(&self, v: usize) -> f64 {
        self.weight[v]
    }

    /// Row-major `n × n` matrix of minimum cut values; the diagonal is infinite.
    pub fn all_pairs(&self) -> Vec<f64> {
        let n = self.n();
        let mut adj: Vec<Vec<(usize, f64)>> = alloc::vec![Vec::new(); n];
        for v in 1..n {
            adj[v].push((self.parent[v], self.weight[v]));
            adj[self.parent[v]].push((v, self.weight[v]));
        }
        let mut out = alloc::vec![f64::INFINITY; n * n];
        let mut stack = Vec::new();
        for root in 0..n {
            let row = &mut out[root * n..(root + 1) * n];
            let mut seen = alloc::vec![false; n];
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &(u, w) in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        row[u] = row[v].min(w);
                        stack.push(u);
                    }
                }
            }
        }
        out
    }
}

/// `k_e` for every edge of `g`: the minimum cut of `gm` between the endpoints of `e`.
pub fn edge_connectivities(g: &Graph, gm: &Graph) -> Result<Vec<f64>> {
    if g.n() != gm.n() {
        return Err(Error::InvalidArgument("graphs differ in vertex count"));
    }
    let n = g.n();
    let pairs = FlowTree::build(gm).all_pairs();
    Ok(g.edges().iter().map(|e| pairs[e.u * n + e.v]).collect())
}

/// Exhaustive minimum `s`–`t` cut over all cuts (oracle, `n <= 20`).
pub fn brute_force_st_cut(g: &Graph, s: usize, t: usize) -> Result<f64> {
    let n = g.n();
    if n > 20 {
        return Err(Error::CutLimit { n, limit: 20 });
    }
    if s >= n || t >= n || s == t {
        return Err(Error::InvalidArgument("cut needs two distinct vertices in range"));
    }
    let mut best = f64::INFINITY;
    for mask in 0u32..1 << n {
        if mask >> s & 1 == 0 || mask >> t & 1 == 1 {
            continue;
        }
        let value: f64 = g
            .edges()
            .iter()
            .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
            .map(|e| e.w)
            .sum();
        best = best.min(value);
    }
    Ok(best)
}
