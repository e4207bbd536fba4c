//! The motif hypergraph, hypergraph minimum cuts and hyperedge strengths.
//!
//! Each distinct instance vertex set becomes one hyperedge whose weight is the
//! summed weight of the instances on it, so hypergraph cut values coincide with
//! motif cut values.
//!
//! Minimum cuts use maximum-adjacency phases with the tight ordering: a vertex
//! outside the growing set `A` gains the weight of a hyperedge once every other
//! vertex of that hyperedge is in `A`. The last vertex of a phase gives a
//! minimum cut separating the last two vertices, which are then merged.
//!
//! Exact strengths come from recursive min-cut peeling. If `c` is the minimum
//! cut of a component, every hyperedge crossing that cut has strength
//! `max(c, inherited)`: any induced subhypergraph containing such a hyperedge
//! either crosses this cut (so its own minimum cut is at most `c`) or leaves the
//! component, where the bound inherited from the ancestors applies.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{Cut, Graph};
use crate::motif::MotifInstance;
use crate::{Error, Result};

/// Default vertex limit for exact strengths.
pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Vertex limit of the exhaustive min-cut oracle.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Constant `c` asserted in `Σ w(f)/κ'(f) <= c·r·(n-1)`.
pub const STRENGTH_SUM_CONSTANT: f64 = 4.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Hyperedge {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    pub weight: f64,
    /// Indices of the instances merged into this hyperedge.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MotifHypergraph {
    n: usize,
    hyperedges: Vec<Hyperedge>,
    instance_count: usize,
}

impl MotifHypergraph {
    /// Hypergraph from weighted vertex sets; equal sets are merged and their weights summed.
    /// Set `i` is recorded as member `i`.
    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = (Vec<usize>, f64)>) -> Result<Self> {
        let mut merged: BTreeMap<Vec<usize>, (f64, Vec<usize>)> = BTreeMap::new();
        let mut count = 0;
        for (i, (mut vs, w)) in sets.into_iter().enumerate() {
            vs.sort_unstable();
            vs.dedup();
            if vs.iter().any(|&v| v >= n) {
                return Err(Error::InvalidArgument("hyperedge vertex out of range"));
            }
            if vs.len() < 2 {
                return Err(Error::InvalidArgument("hyperedge needs at least two vertices"));
            }
            if !(w > 0.0) {
                return Err(Error::InvalidArgument("hyperedge weight must be positive"));
            }
            let slot = merged.entry(vs).or_insert((0.0, Vec::new()));
            slot.0 += w;
            slot.1.push(i);
            count = i + 1;
        }
        let hyperedges = merged
            .into_iter()
            .map(|(vertices, (weight, members))| Hyperedge { vertices, weight, members })
            .collect();
        Ok(MotifHypergraph { n, hyperedges, instance_count: count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn instance_count(&self) -> usize {
        self.instance_count
    }

    /// Largest hyperedge size.
    pub fn rank(&self) -> usize {
        self.hyperedges.iter().map(|f| f.vertices.len()).max().unwrap_or(0)
    }

    pub fn total_weight(&self) -> f64 {
        self.hyperedges.iter().map(|f| f.weight).sum()
    }

    /// Weight of hyperedges with vertices on both sides; `side[v]` marks `S`.
    pub fn cut_value(&self, side: &[bool]) -> f64 {
        self.hyperedges
            .iter()
            .filter(|f| crosses(&f.vertices, side))
            .map(|f| f.weight)
            .sum()
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for f in &self.hyperedges {
            for pair in f.vertices.windows(2) {
                uf.union(pair[0], pair[1]);
            }
        }
        (0..self.n).filter(|&v| uf.find(v) == v).count()
    }
}

fn crosses(vertices: &[usize], side: &[bool]) -> bool {
    let first = side[vertices[0]];
    vertices[1..].iter().any(|&v| side[v] != first)
}

/// One hyperedge per distinct instance vertex set, weighted by the summed instance weights.
pub fn build_motif_hypergraph(g: &Graph, instances: &[MotifInstance]) -> MotifHypergraph {
    MotifHypergraph::from_sets(g.n(), instances.iter().map(|inst| (inst.vertex_set(), inst.weight)))
        .expect("instances of a graph form valid hyperedges")
}

#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            // Smaller root wins.
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }
}

/// Induced subhypergraph in local coordinates.
struct Local {
    vertices: Vec<usize>,
    edges: Vec<(Vec<usize>, f64)>,
    // Hyperedge index in the parent hypergraph for each local edge.
    origin: Vec<usize>,
}

impl Local {
    fn induced(h: &MotifHypergraph, vertices: &[usize], candidates: &[usize], pos: &mut [usize]) -> Local {
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for &e in candidates {
            let f = &h.hyperedges[e];
            if f.vertices.iter().all(|&v| pos[v] != usize::MAX) {
                edges.push((f.vertices.iter().map(|&v| pos[v]).collect(), f.weight));
                origin.push(e);
            }
        }
        for &v in vertices {
            pos[v] = usize::MAX;
        }
        Local { vertices: vertices.to_vec(), edges, origin }
    }

    fn k(&self) -> usize {
        self.vertices.len()
    }

    /// Connected components as sorted local vertex lists, ordered by smallest member.
    fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.k());
        for (vs, _) in &self.edges {
            for pair in vs.windows(2) {
                uf.union(pair[0], pair[1]);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.k() {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        groups.into_values().collect()
    }
}

/// Minimum cut of a connected hypergraph on `k >= 2` local vertices.
/// Returns one side (local indices, sorted) and the cut value.
fn ma_min_cut(k: usize, edges: &[(Vec<usize>, f64)]) -> (Vec<usize>, f64) {
    let mut groups: Vec<Vec<usize>> = (0..k).map(|v| alloc::vec![v]).collect();
    let mut alive = alloc::vec![true; k];
    let mut current: Vec<(Vec<usize>, f64)> = edges.iter().filter(|(vs, _)| vs.len() >= 2).cloned().collect();
    let mut best_value = f64::INFINITY;
    let mut best_side: Vec<usize> = Vec::new();
    let mut remaining = k;

    let mut incidence: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
    let mut in_a = alloc::vec![false; k];
    let mut key = alloc::vec![0.0f64; k];
    let mut outside: Vec<usize> = Vec::new();

    while remaining > 1 {
        for list in incidence.iter_mut() {
            list.clear();
        }
        for (i, (vs, _)) in current.iter().enumerate() {
            for &v in vs {
                incidence[v].push(i);
            }
        }
        outside.clear();
        outside.extend(current.iter().map(|(vs, _)| vs.len()));
        for v in 0..k {
            in_a[v] = false;
            key[v] = 0.0;
        }
        let start = (0..k).find(|&v| alive[v]).expect("an alive vertex exists");
        let mut prev = start;
        let mut last = start;
        let mut added = 0;
        let mut next = Some(start);
        while let Some(x) = next {
            in_a[x] = true;
            added += 1;
            prev = last;
            last = x;
            for &e in &incidence[x] {
                outside[e] -= 1;
                if outside[e] == 1 {
                    let (vs, w) = &current[e];
                    if let Some(&y) = vs.iter().find(|&&y| !in_a[y]) {
                        key[y] += *w;
                    }
                }
            }
            next = None;
            if added < remaining {
                let mut best_key = f64::NEG_INFINITY;
                for v in 0..k {
                    if alive[v] && !in_a[v] && key[v] > best_key {
                        best_key = key[v];
                        next = Some(v);
                    }
                }
            }
        }
        let (s, t) = (prev, last);
        let phase_value: f64 = incidence[t].iter().map(|&e| current[e].1).sum();
        if phase_value < best_value {
            best_value = phase_value;
            best_side = groups[t].clone();
        }
        // Merge t into s.
        let moved = core::mem::take(&mut groups[t]);
        groups[s].extend(moved);
        alive[t] = false;
        remaining -= 1;
        current = current
            .into_iter()
            .filter_map(|(mut vs, w)| {
                for v in vs.iter_mut() {
                    if *v == t {
                        *v = s;
                    }
                }
                vs.sort_unstable();
                vs.dedup();
                (vs.len() >= 2).then_some((vs, w))
            })
            .collect();
    }
    best_side.sort_unstable();
    (best_side, best_value)
}

/// Maps a local side to global vertices, canonicalized to hold the smallest vertex.
fn canonical_side(local: &Local, side: &[usize]) -> Vec<usize> {
    let mut flags = alloc::vec![false; local.k()];
    for &v in side {
        flags[v] = true;
    }
    let keep = flags[0];
    (0..local.k()).filter(|&v| flags[v] == keep).map(|v| local.vertices[v]).collect()
}

/// Minimum cut of the subhypergraph induced by `active` (`|active| >= 2`).
///
/// Only hyperedges fully inside `active` count. The returned side is a subset of
/// `active` holding its smallest vertex; a disconnected subhypergraph yields a
/// connected component and value 0.
pub fn hypergraph_min_cut(h: &MotifHypergraph, active: &[usize]) -> Result<(Cut, f64)> {
    let mut vertices = active.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() < 2 || vertices.iter().any(|&v| v >= h.n) {
        return Err(Error::InvalidArgument("min cut needs at least two active vertices in range"));
    }
    let all: Vec<usize> = (0..h.hyperedges.len()).collect();
    let mut pos = alloc::vec![usize::MAX; h.n];
    let local = Local::induced(h, &vertices, &all, &mut pos);
    let (side, value) = local_min_cut(&local);
    Ok((Cut::from_sorted_unchecked(canonical_side(&local, &side)), value))
}

fn local_min_cut(local: &Local) -> (Vec<usize>, f64) {
    let comps = local.components();
    if comps.len() > 1 {
        return (comps[0].clone(), 0.0);
    }
    ma_min_cut(local.k(), &local.edges)
}

/// Exhaustive minimum cut over all `2^(k-1) - 1` cuts of the induced subhypergraph (oracle).
pub fn brute_force_min_cut(h: &MotifHypergraph, active: &[usize]) -> Result<(Cut, f64)> {
    let mut vertices = active.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let k = vertices.len();
    if k < 2 {
        return Err(Error::InvalidArgument("min cut needs at least two active vertices"));
    }
    if k > BRUTE_FORCE_LIMIT {
        return Err(Error::CutLimit { n: k, limit: BRUTE_FORCE_LIMIT });
    }
    let mut pos = alloc::vec![usize::MAX; h.n];
    for (i, &v) in vertices.iter().enumerate() {
        pos[v] = i;
    }
    let masks: Vec<(u32, f64)> = h
        .hyperedges
        .iter()
        .filter(|f| f.vertices.iter().all(|&v| v < h.n && pos[v] != usize::MAX))
        .map(|f| (f.vertices.iter().fold(0u32, |m, &v| m | 1 << pos[v]), f.weight))
        .collect();
    let full = (1u32 << k) - 1;
    let mut best = (f64::INFINITY, 0u32);
    for half in 0..(1u32 << (k - 1)) - 1 {
        let s = half << 1 | 1;
        let value: f64 = masks
            .iter()
            .filter(|(m, _)| m & s != 0 && m & (full ^ s) != 0)
            .map(|(_, w)| w)
            .sum();
        if value < best.0 {
            best = (value, s);
        }
    }
    let side = (0..k).filter(|&i| best.1 >> i & 1 == 1).map(|i| vertices[i]).collect();
    Ok((Cut::from_sorted_unchecked(side), best.0))
}

/// Per-hyperedge and per-instance strengths (or strength estimates).
#[derive(Debug, Clone, PartialEq)]
pub struct StrengthTable {
    pub hyperedge: Vec<f64>,
    pub instance: Vec<f64>,
    /// Whether the values are exact strengths.
    pub exact: bool,
}

impl StrengthTable {
    fn from_hyperedges(h: &MotifHypergraph, hyperedge: Vec<f64>, exact: bool) -> Self {
        let mut instance = alloc::vec![0.0; h.instance_count];
        for (f, &k) in h.hyperedges.iter().zip(&hyperedge) {
            for &i in &f.members {
                instance[i] = k;
            }
        }
        StrengthTable { hyperedge, instance, exact }
    }

    /// `Σ_f w(f) / κ(f)`.
    pub fn normalized_weight(&self, h: &MotifHypergraph) -> f64 {
        h.hyperedges.iter().zip(&self.hyperedge).map(|(f, k)| f.weight / k).sum()
    }
}

/// A component met during decomposition together with its minimum cut value.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub min_cut: f64,
}

/// Exact strengths with the default vertex limit.
pub fn exact_strengths(h: &MotifHypergraph) -> Result<StrengthTable> {
    exact_strengths_with_limit(h, DEFAULT_EXACT_LIMIT).map(|(table, _)| table)
}

/// Exact strengths by recursive min-cut peeling, plus the decomposition components.
pub fn exact_strengths_with_limit(h: &MotifHypergraph, limit: usize) -> Result<(StrengthTable, Vec<Component>)> {
    if h.n > limit {
        return Err(Error::ExactLimit { n: h.n, limit });
    }
    let mut kappa = alloc::vec![0.0; h.hyperedges.len()];
    let mut components = Vec::new();
    let mut pos = alloc::vec![usize::MAX; h.n];
    let mut stack: Vec<(Vec<usize>, Vec<usize>, f64)> =
        alloc::vec![((0..h.n).collect(), (0..h.hyperedges.len()).collect(), 0.0)];
    while let Some((vertices, edges, inherited)) = stack.pop() {
        if vertices.len() < 2 || edges.is_empty() {
            continue;
        }
        let local = Local::induced(h, &vertices, &edges, &mut pos);
        let comps = local.components();
        if comps.len() > 1 {
            for part in comps.into_iter().rev() {
                push_part(&local, &part, inherited, &mut stack);
            }
            continue;
        }
        let (side, c) = ma_min_cut(local.k(), &local.edges);
        let level = if c > inherited { c } else { inherited };
        components.push(Component { vertices: vertices.clone(), min_cut: c });
        let mut flags = alloc::vec![false; local.k()];
        for &v in &side {
            flags[v] = true;
        }
        for (i, (vs, _)) in local.edges.iter().enumerate() {
            if crosses(vs, &flags) {
                kappa[local.origin[i]] = level;
            }
        }
        let inside: Vec<usize> = (0..local.k()).filter(|&v| flags[v]).collect();
        let outside: Vec<usize> = (0..local.k()).filter(|&v| !flags[v]).collect();
        push_part(&local, &outside, level, &mut stack);
        push_part(&local, &inside, level, &mut stack);
    }
    Ok((StrengthTable::from_hyperedges(h, kappa, true), components))
}

fn push_part(local: &Local, part: &[usize], level: f64, stack: &mut Vec<(Vec<usize>, Vec<usize>, f64)>) {
    if part.len() < 2 {
        return;
    }
    let mut member = alloc::vec![false; local.k()];
    for &v in part {
        member[v] = true;
    }
    let edges: Vec<usize> = local
        .edges
        .iter()
        .zip(&local.origin)
        .filter(|((vs, _), _)| vs.iter().all(|&v| member[v]))
        .map(|(_, &o)| o)
        .collect();
    if edges.is_empty() {
        return;
    }
    let vertices = part.iter().map(|&v| local.vertices[v]).collect();
    stack.push((vertices, edges, level));
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateOptions {
    /// At or below this many vertices the exact strengths are returned.
    pub exact_limit: usize,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        EstimateOptions { exact_limit: DEFAULT_EXACT_LIMIT }
    }
}

/// Strength estimates `κ' <= κ` with `Σ w/κ' <= 4·r·(n-1)`.
pub fn estimate_strengths(h: &MotifHypergraph) -> Result<StrengthTable> {
    estimate_strengths_with(h, EstimateOptions::default())
}

/// Exact strengths up to `opts.exact_limit` vertices, certified doubling levels above.
///
/// The level scheme certifies components whose minimum cut reaches the current
/// target: it peels vertices whose degree is below the target, splits along any
/// cut below the target, and assigns each certified component's exact minimum
/// cut `c` to its hyperedges before doubling the target to `2c`. Every certified
/// value is the minimum cut of a component containing the hyperedge, so
/// `κ' <= κ`; a hyperedge of strength `κ` lies in a certified component at every
/// target up to `κ`, so `κ' > κ/2`.
pub fn estimate_strengths_with(h: &MotifHypergraph, opts: EstimateOptions) -> Result<StrengthTable> {
    let table = if h.n <= opts.exact_limit {
        exact_strengths_with_limit(h, opts.exact_limit)?.0
    } else {
        StrengthTable::from_hyperedges(h, certified_levels(h), false)
    };
    let total = table.normalized_weight(h);
    let bound = STRENGTH_SUM_CONSTANT * h.rank() as f64 * (h.n.saturating_sub(1)) as f64;
    if total > bound * (1.0 + 1e-9) {
        return Err(Error::BoundViolated { what: "strength estimate sum", value: total, bound });
    }
    Ok(table)
}

fn certified_levels(h: &MotifHypergraph) -> Vec<f64> {
    let mut kappa = alloc::vec![0.0f64; h.hyperedges.len()];
    let mut pos = alloc::vec![usize::MAX; h.n];
    let mut stack: Vec<(Vec<usize>, Vec<usize>, f64)> =
        alloc::vec![((0..h.n).collect(), (0..h.hyperedges.len()).collect(), 0.0)];
    while let Some((vertices, edges, target)) = stack.pop() {
        if vertices.len() < 2 || edges.is_empty() {
            continue;
        }
        let mut local = Local::induced(h, &vertices, &edges, &mut pos);
        if target > 0.0 {
            peel_below(&mut local, target);
        }
        for part in local.components() {
            if part.len() < 2 {
                continue;
            }
            let sub = restrict(&local, &part);
            if sub.edges.is_empty() {
                continue;
            }
            let (side, c) = ma_min_cut(sub.k(), &sub.edges);
            if c >= target {
                for &e in &sub.origin {
                    if c > kappa[e] {
                        kappa[e] = c;
                    }
                }
                stack.push((sub.vertices.clone(), sub.origin.clone(), 2.0 * c));
            } else {
                let mut flags = alloc::vec![false; sub.k()];
                for &v in &side {
                    flags[v] = true;
                }
                for keep in [true, false] {
                    let piece: Vec<usize> = (0..sub.k()).filter(|&v| flags[v] == keep).collect();
                    if piece.len() < 2 {
                        continue;
                    }
                    let part = restrict(&sub, &piece);
                    if !part.edges.is_empty() {
                        stack.push((part.vertices, part.origin, target));
                    }
                }
            }
        }
    }
    kappa
}

/// Removes, repeatedly, every vertex whose weighted degree is below `target`,
/// together with its hyperedges. Removed vertices stay in the vertex list but lose all edges.
fn peel_below(local: &mut Local, target: f64) {
    let k = local.k();
    let mut degree = alloc::vec![0.0f64; k];
    let mut incidence: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
    for (i, (vs, w)) in local.edges.iter().enumerate() {
        for &v in vs {
            degree[v] += w;
            incidence[v].push(i);
        }
    }
    let mut live_edge = alloc::vec![true; local.edges.len()];
    let mut removed = alloc::vec![false; k];
    let mut queue: Vec<usize> = (0..k).filter(|&v| degree[v] < target).collect();
    while let Some(v) = queue.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &e in &incidence[v] {
            if !live_edge[e] {
                continue;
            }
            live_edge[e] = false;
            let (vs, w) = &local.edges[e];
            for &u in vs {
                degree[u] -= w;
                if !removed[u] && degree[u] < target {
                    queue.push(u);
                }
            }
        }
    }
    let mut keep = live_edge.iter();
    local.edges.retain(|_| *keep.next().unwrap());
    let mut keep = live_edge.iter();
    local.origin.retain(|_| *keep.next().unwrap());
}

/// Subhypergraph of `local` induced by local vertices `part`.
fn restrict(local: &Local, part: &[usize]) -> Local {
    let mut pos = alloc::vec![usize::MAX; local.k()];
    for (i, &v) in part.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for ((vs, w), &o) in local.edges.iter().zip(&local.origin) {
        if vs.iter().all(|&v| pos[v] != usize::MAX) {
            edges.push((vs.iter().map(|&v| pos[v]).collect(), *w));
            origin.push(o);
        }
    }
    Local { vertices: part.iter().map(|&v| local.vertices[v]).collect(), edges, origin }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_instances;
    use crate::generate;
    use crate::graph::Kind;
    use crate::motif::Motif;
    use alloc::vec;

    fn k4_triangles() -> MotifHypergraph {
        let g = generate::clique(4);
        let inst = enumerate_instances(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        build_motif_hypergraph(&g, &inst)
    }

    #[test]
    fn k4_triangle_hypergraph() {
        let h = k4_triangles();
        assert_eq!(h.hyperedges().len(), 4);
        assert!(h.hyperedges().iter().all(|f| f.weight == 1.0));
        let (_, value) = hypergraph_min_cut(&h, &[0, 1, 2, 3]).unwrap();
        assert_eq!(value, 3.0);
        let table = exact_strengths(&h).unwrap();
        assert_eq!(table.hyperedge, vec![3.0; 4]);
        assert_eq!(table.instance, vec![3.0; 4]);
    }

    #[test]
    fn merges_instances_on_one_vertex_set() {
        let h = MotifHypergraph::from_sets(4, [(vec![0, 1, 2], 2.0), (vec![2, 1, 0], 3.0)]).unwrap();
        assert_eq!(h.hyperedges().len(), 1);
        assert_eq!(h.hyperedges()[0].weight, 5.0);
        assert_eq!(h.hyperedges()[0].members, vec![0, 1]);
    }

    #[test]
    fn empty_and_single_hyperedge() {
        let empty = MotifHypergraph::from_sets(3, []).unwrap();
        assert_eq!(hypergraph_min_cut(&empty, &[0, 1, 2]).unwrap().1, 0.0);
        assert!(exact_strengths(&empty).unwrap().hyperedge.is_empty());
        assert!(estimate_strengths(&empty).unwrap().instance.is_empty());
        let single = MotifHypergraph::from_sets(3, [(vec![0, 1, 2], 5.0)]).unwrap();
        assert_eq!(hypergraph_min_cut(&single, &[0, 1, 2]).unwrap().1, 5.0);
        assert_eq!(exact_strengths(&single).unwrap().hyperedge, vec![5.0]);
    }

    #[test]
    fn disjoint_triangles_keep_their_weights() {
        let h = MotifHypergraph::from_sets(6, [(vec![0, 1, 2], 1.0), (vec![3, 4, 5], 7.0)]).unwrap();
        assert_eq!(exact_strengths(&h).unwrap().hyperedge, vec![1.0, 7.0]);
        let (cut, value) = hypergraph_min_cut(&h, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(value, 0.0);
        assert_eq!(cut.side(), &[0, 1, 2]);
    }

    #[test]
    fn active_subset_ignores_outside_hyperedges() {
        let h = k4_triangles();
        // Only {0,1,2} lies inside.
        let (_, value) = hypergraph_min_cut(&h, &[0, 1, 2]).unwrap();
        assert_eq!(value, 1.0);
        assert!(hypergraph_min_cut(&h, &[0]).is_err());
    }

    #[test]
    fn ma_matches_brute_force_on_random_hypergraphs() {
        let mut rng = crate::sampling::rng(3);
        for _ in 0..300 {
            let n = 2 + (rng_next(&mut rng) % 8) as usize;
            let m = 1 + (rng_next(&mut rng) % 12) as usize;
            let mut sets = Vec::new();
            for _ in 0..m {
                let size = 2 + (rng_next(&mut rng) % 3) as usize;
                let mut vs: Vec<usize> = (0..size).map(|_| (rng_next(&mut rng) % n as u64) as usize).collect();
                vs.sort_unstable();
                vs.dedup();
                if vs.len() >= 2 {
                    sets.push((vs, 1.0 + (rng_next(&mut rng) % 4) as f64));
                }
            }
            let h = MotifHypergraph::from_sets(n, sets).unwrap();
            let all: Vec<usize> = (0..n).collect();
            let fast = hypergraph_min_cut(&h, &all).unwrap();
            let slow = brute_force_min_cut(&h, &all).unwrap();
            assert_eq!(fast.1, slow.1);
            assert_eq!(h.cut_value(&fast.0.membership(n)), fast.1);
        }
    }

    fn rng_next(rng: &mut rand_chacha::ChaCha8Rng) -> u64 {
        rand_core::RngCore::next_u64(rng)
    }

    #[test]
    fn estimates_are_sandwiched() {
        let g = generate::random_graph(24, 0.5, Kind::Undirected, (0.5, 2.0), 4).unwrap();
        let inst = enumerate_instances(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        let h = build_motif_hypergraph(&g, &inst);
        let exact = exact_strengths(&h).unwrap();
        let est = estimate_strengths_with(&h, EstimateOptions { exact_limit: 0 }).unwrap();
        assert!(!est.exact);
        for (k, e) in exact.hyperedge.iter().zip(&est.hyperedge) {
            assert!(*e <= *k * (1.0 + 1e-12));
            assert!(*e > *k / 2.0);
        }
    }
}
