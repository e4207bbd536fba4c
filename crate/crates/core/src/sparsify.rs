//! Strength-based and connectivity-based motif cut sparsification.
//!
//! Both engines run the same round structure. A round marks the critical edges
//! of every motif, keeps them at their current weight, and keeps every other
//! edge independently with probability `p = 2^(-1/(2 r*_max))`, scaled by `1/p`.
//! The full sparsifier runs `⌈2 c1 r*_max log2 n⌉` rounds with accuracy
//! `ε' = ε / (5 c1 r*_max log2 n)` per round.
//!
//! The strength engine marks an edge critical when `Σ_{I ∋ e} w(I)/κ'_I` reaches
//! `d ε'^2 / (r* (log2 n + r))`. Instances are enumerated once; kept edges only
//! change weight, so later rounds just drop instances that lost an edge.
//!
//! The connectivity engine needs no enumeration: it computes motif weights
//! through the tuple graph, edge connectivities of the motif-weighted graph,
//! and the layered importance `ν̂`, and compares `ν̂` with
//! `ε'^2 / (256 (d1 + r + 2 r*) r*^2 r log2 n ln n)`.
//!
//! When a round finds every remaining edge critical the graph is a fixed point
//! of all later rounds, so the loop stops there.

use alloc::vec::Vec;

use crate::connectivity::edge_connectivities;
use crate::enumerate::enumerate_instances;
use crate::graph::Graph;
use crate::hypergraph::{
    estimate_strengths_with, exact_strengths_with_limit, EstimateOptions, MotifHypergraph, DEFAULT_EXACT_LIMIT,
};
use crate::motif::Motif;
use crate::sampling::KeyedSampler;
use crate::weights::{motif_weighted_graph, motif_weights_fast};
use crate::{Error, Result};

/// Constant `c` asserted in the critical-edge count bound.
pub const CRITICAL_COUNT_CONSTANT: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Strength,
    Connectivity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SparsifyConfig {
    pub epsilon: f64,
    pub c1: f64,
    pub d: f64,
    pub d1: f64,
    /// Multiplier `>= 1` on both critical thresholds.
    pub threshold_scale: f64,
    pub seed: u64,
    pub engine: Engine,
    pub rounds_override: Option<usize>,
    /// Vertex count up to which strengths are exact.
    pub exact_limit: usize,
    /// Recompute exact importances each round and count critical edges the engine missed.
    pub audit: bool,
}

impl Default for SparsifyConfig {
    fn default() -> Self {
        SparsifyConfig {
            epsilon: 0.5,
            c1: 10.0,
            d: 1.0 / 64.0,
            d1: 11.0,
            threshold_scale: 1.0,
            seed: 0,
            engine: Engine::Strength,
            rounds_override: None,
            exact_limit: DEFAULT_EXACT_LIMIT,
            audit: false,
        }
    }
}

impl SparsifyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidConfig("epsilon must lie in (0, 1)"));
        }
        if !(self.threshold_scale >= 1.0) || !self.threshold_scale.is_finite() {
            return Err(Error::InvalidConfig("threshold scale must be a finite value >= 1"));
        }
        if !(self.c1 > 0.0 && self.d > 0.0 && self.d1 > 0.0) {
            return Err(Error::InvalidConfig("c1, d and d1 must be positive"));
        }
        Ok(())
    }
}

fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// Largest motif edge count.
pub fn r_star_max(motifs: &[Motif]) -> usize {
    motifs.iter().map(Motif::r_star).max().unwrap_or(1)
}

/// Per-round accuracy `ε / (5 c1 r*_max log2 n)`.
pub fn eps_prime(cfg: &SparsifyConfig, n: usize, r_star_max: usize) -> f64 {
    cfg.epsilon / (5.0 * cfg.c1 * r_star_max as f64 * log2(n as f64))
}

/// `⌈2 c1 r*_max log2 n⌉`, or the configured override.
pub fn round_count(cfg: &SparsifyConfig, n: usize, r_star_max: usize) -> usize {
    cfg.rounds_override
        .unwrap_or_else(|| libm::ceil(2.0 * cfg.c1 * r_star_max as f64 * log2(n as f64)) as usize)
}

/// Keep probability `2^(-1/(2 r*_max))` of non-critical edges.
pub fn keep_probability(r_star_max: usize) -> f64 {
    libm::exp2(-1.0 / (2.0 * r_star_max as f64))
}

/// Strength-engine threshold `scale · d ε'^2 / (r* (log2 n + r))`.
pub fn strength_threshold(cfg: &SparsifyConfig, eps_prime: f64, m: &Motif, n: usize) -> f64 {
    cfg.threshold_scale * cfg.d * eps_prime * eps_prime / (m.r_star() as f64 * (log2(n as f64) + m.r() as f64))
}

/// Connectivity-engine threshold `scale · ε'^2 / (256 (d1 + r + 2r*) r*^2 r log2 n ln n)`.
pub fn connectivity_threshold(cfg: &SparsifyConfig, eps_prime: f64, m: &Motif, n: usize) -> f64 {
    let (r, rs) = (m.r() as f64, m.r_star() as f64);
    let nf = n as f64;
    cfg.threshold_scale * eps_prime * eps_prime
        / (256.0 * (cfg.d1 + r + 2.0 * rs) * rs * rs * r * log2(nf) * libm::log(nf))
}

/// Bound `c r r*^2 (n-1)(log2 n + r) / (d ε'^2)` on the strength-engine critical count.
pub fn critical_count_bound(cfg: &SparsifyConfig, eps_prime: f64, m: &Motif, n: usize) -> f64 {
    let (r, rs) = (m.r() as f64, m.r_star() as f64);
    CRITICAL_COUNT_CONSTANT * r * rs * rs * (n as f64 - 1.0) * (log2(n as f64) + r) / (cfg.d * eps_prime * eps_prime)
}

/// Bound `2 r*^2 (n-1) / Υ'` on the connectivity-engine critical count, `Υ'` unscaled.
pub fn connectivity_count_bound(cfg: &SparsifyConfig, eps_prime: f64, m: &Motif, n: usize) -> f64 {
    let unscaled = SparsifyConfig { threshold_scale: 1.0, ..cfg.clone() };
    let rs = m.r_star() as f64;
    2.0 * rs * rs * (n as f64 - 1.0) / connectivity_threshold(&unscaled, eps_prime, m, n)
}

/// Per-edge importance estimates and the critical threshold of one motif.
#[derive(Debug, Clone, PartialEq)]
pub struct ImportanceTable {
    pub values: Vec<f64>,
    pub threshold: f64,
}

impl ImportanceTable {
    pub fn critical(&self) -> Vec<bool> {
        self.values.iter().map(|&v| v >= self.threshold).collect()
    }

    pub fn critical_count(&self) -> usize {
        self.values.iter().filter(|&&v| v >= self.threshold).count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundStats {
    pub round: usize,
    pub edges_in: usize,
    /// Critical edges per motif.
    pub critical: Vec<usize>,
    /// Edges critical for at least one motif.
    pub critical_union: usize,
    pub edges_out: usize,
    /// Critical edges by exact importance that the engine did not mark (audit only).
    pub audit_misses: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SparsifyStats {
    pub engine: Engine,
    pub input_edges: usize,
    pub output_edges: usize,
    pub eps_prime: f64,
    pub rounds: usize,
    pub rounds_run: usize,
    pub keep_probability: f64,
    /// Critical threshold per motif.
    pub thresholds: Vec<f64>,
    /// Whether `(1 + ε')^rounds <= 1 + ε`.
    pub accuracy_budget_ok: bool,
    pub per_round: Vec<RoundStats>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sparsified {
    pub graph: Graph,
    pub stats: SparsifyStats,
}

fn check_motifs(g: &Graph, motifs: &[Motif]) -> Result<()> {
    if motifs.is_empty() {
        return Err(Error::InvalidArgument("at least one motif is required"));
    }
    if motifs.iter().any(|m| m.kind() != g.kind()) {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// Instance tracked across rounds by original edge ids.
#[derive(Debug, Clone)]
struct Tracked {
    vertices: Vec<usize>,
    edge_ids: Vec<usize>,
}

fn track(g: &Graph, m: &Motif) -> Result<Vec<Tracked>> {
    Ok(enumerate_instances(g, m)?
        .into_iter()
        .map(|inst| Tracked { vertices: inst.vertex_set(), edge_ids: inst.edge_ids })
        .collect())
}

/// `Σ_{I ∋ e} w(I)/κ_I` for the live instances, with `κ` exact or estimated.
fn eta(n: usize, weights: &[f64], instances: &[Tracked], estimate: Option<EstimateOptions>) -> Result<Vec<f64>> {
    let inst_weight: Vec<f64> =
        instances.iter().map(|t| t.edge_ids.iter().map(|&e| weights[e]).product()).collect();
    let h = MotifHypergraph::from_sets(
        n,
        instances.iter().zip(&inst_weight).map(|(t, &w)| (t.vertices.clone(), w)),
    )?;
    let kappa = match estimate {
        Some(opts) => estimate_strengths_with(&h, opts)?.instance,
        None => exact_strengths_with_limit(&h, usize::MAX)?.0.instance,
    };
    let mut out = alloc::vec![0.0; weights.len()];
    for ((t, &w), &k) in instances.iter().zip(&inst_weight).zip(&kappa) {
        for &e in &t.edge_ids {
            out[e] += w / k;
        }
    }
    Ok(out)
}

/// Strength-based importance `η̂_M(e)` of every edge of `g` with its threshold.
pub fn strength_importance(g: &Graph, m: &Motif, eps_prime: f64, cfg: &SparsifyConfig) -> Result<ImportanceTable> {
    let instances = track(g, m)?;
    let weights: Vec<f64> = g.edges().iter().map(|e| e.w).collect();
    let values = eta(g.n(), &weights, &instances, Some(EstimateOptions { exact_limit: cfg.exact_limit }))?;
    Ok(ImportanceTable { values, threshold: strength_threshold(cfg, eps_prime, m, g.n()) })
}

/// Layered importance `ν̂_M(e) = Σ_j (w_{M,j}(e) - w_{M,j+1}(e)) r* / (2^j k_min)`.
///
/// `conn[e]` is the connectivity of edge `e` in the motif-weighted graph, layer `j`
/// keeps the edges with `conn >= 2^j k_min`, and `k_min` is the smallest positive
/// connectivity.
pub fn layered_importance(g: &Graph, m: &Motif, conn: &[f64]) -> Result<Vec<f64>> {
    if conn.len() != g.m() {
        return Err(Error::InvalidArgument("connectivity vector length differs from edge count"));
    }
    let mut out = alloc::vec![0.0; g.m()];
    let Some(k_min) = conn.iter().copied().filter(|&k| k > 0.0).reduce(f64::min) else {
        return Ok(out);
    };
    let k_max = conn.iter().copied().fold(0.0, f64::max);
    let mut layers = libm::ceil(log2(k_max / k_min)).max(0.0) as usize;
    if let (Some(lo), Some(hi)) = (g.min_weight(), g.max_weight()) {
        let cap = libm::ceil(m.r_star() as f64 * log2(hi / lo) + m.r() as f64 * log2(g.n() as f64)) as usize + 1;
        layers = layers.min(cap);
    }
    let r_star = m.r_star() as f64;
    let layer_weights = |j: usize| -> Result<Vec<f64>> {
        let level = libm::ldexp(k_min, j as i32);
        let keep: Vec<bool> = conn.iter().map(|&k| k >= level).collect();
        let sub = g.edge_subgraph(&keep);
        let w = motif_weights_fast(&sub, m)?;
        let mut full = alloc::vec![0.0; g.m()];
        let mut it = w.into_iter();
        for (slot, &k) in full.iter_mut().zip(&keep) {
            if k {
                *slot = it.next().expect("one weight per kept edge");
            }
        }
        Ok(full)
    };
    let mut current = layer_weights(0)?;
    for j in 0..=layers {
        let next = if j == layers { alloc::vec![0.0; g.m()] } else { layer_weights(j + 1)? };
        let scale = r_star / libm::ldexp(k_min, j as i32);
        for ((o, &a), &b) in out.iter_mut().zip(&current).zip(&next) {
            *o += (a - b) * scale;
        }
        current = next;
    }
    Ok(out)
}

/// Connectivity-based importance `ν̂_M(e)` of every edge of `g` with its threshold.
pub fn connectivity_importance(
    g: &Graph,
    m: &Motif,
    eps_prime: f64,
    cfg: &SparsifyConfig,
) -> Result<ImportanceTable> {
    let weights = motif_weights_fast(g, m)?;
    let gm = motif_weighted_graph(g, &weights);
    let conn = edge_connectivities(g, &gm)?;
    let values = layered_importance(g, m, &conn)?;
    Ok(ImportanceTable { values, threshold: connectivity_threshold(cfg, eps_prime, m, g.n()) })
}

struct Sampling<'a> {
    sampler: &'a KeyedSampler,
    p: f64,
}

impl Sampling<'_> {
    /// New weights for `g` after one round: critical edges keep their weight, others
    /// survive with probability `p` at `w/p`, or get weight 0.
    fn apply(&self, g: &Graph, round: usize, critical: &[bool]) -> Vec<f64> {
        let n = g.n() as u64;
        g.edges()
            .iter()
            .zip(critical)
            .map(|(e, &crit)| {
                if crit {
                    e.w
                } else if self.sampler.bernoulli(round as u64, e.u as u64 * n + e.v as u64, self.p) {
                    e.w / self.p
                } else {
                    0.0
                }
            })
            .collect()
    }
}

fn union_flags(flags: &[Vec<bool>], m: usize) -> Vec<bool> {
    (0..m).map(|e| flags.iter().any(|f| f[e])).collect()
}

fn strength_round(
    g: &Graph,
    tracked: &[Vec<Tracked>],
    motifs: &[Motif],
    eps_prime: f64,
    cfg: &SparsifyConfig,
) -> Result<(Vec<Vec<bool>>, Option<usize>)> {
    let weights: Vec<f64> = g.edges().iter().map(|e| e.w).collect();
    let n = g.n();
    let mut flags = Vec::with_capacity(motifs.len());
    let mut misses = cfg.audit.then_some(0);
    for (m, list) in motifs.iter().zip(tracked) {
        let values = eta(n, &weights, list, Some(EstimateOptions { exact_limit: cfg.exact_limit }))?;
        let threshold = strength_threshold(cfg, eps_prime, m, n);
        let crit: Vec<bool> = values.iter().map(|&v| v >= threshold).collect();
        let count = crit.iter().filter(|&&c| c).count() as f64;
        let bound = critical_count_bound(cfg, eps_prime, m, n);
        if count > bound {
            return Err(Error::BoundViolated { what: "critical edge count", value: count, bound });
        }
        if let Some(missed) = misses.as_mut() {
            let exact = eta(n, &weights, list, None)?;
            *missed += exact.iter().zip(&crit).filter(|(&v, &c)| v >= threshold && !c).count();
        }
        flags.push(crit);
    }
    Ok((flags, misses))
}

fn connectivity_round(g: &Graph, motifs: &[Motif], eps_prime: f64, cfg: &SparsifyConfig) -> Result<Vec<Vec<bool>>> {
    let lo = g.min_weight().unwrap_or(1.0);
    let scaled: Vec<f64> = g.edges().iter().map(|e| e.w / lo).collect();
    let gs = g.reweighted(&scaled)?;
    let mut flags = Vec::with_capacity(motifs.len());
    for m in motifs {
        let table = connectivity_importance(&gs, m, eps_prime, cfg)?;
        let count = table.critical_count() as f64;
        let bound = connectivity_count_bound(cfg, eps_prime, m, g.n());
        if count > bound * (1.0 + 1e-9) {
            return Err(Error::BoundViolated { what: "critical edge count", value: count, bound });
        }
        flags.push(table.critical());
    }
    Ok(flags)
}

fn finish_round(
    g: &Graph,
    round: usize,
    flags: &[Vec<bool>],
    sampling: &Sampling<'_>,
    audit_misses: Option<usize>,
) -> Result<(Graph, RoundStats)> {
    let critical = union_flags(flags, g.m());
    let next = g.reweighted(&sampling.apply(g, round, &critical))?;
    let stats = RoundStats {
        round,
        edges_in: g.m(),
        critical: flags.iter().map(|f| f.iter().filter(|&&c| c).count()).collect(),
        critical_union: critical.iter().filter(|&&c| c).count(),
        edges_out: next.m(),
        audit_misses,
    };
    Ok((next, stats))
}

/// One strength-engine round: critical edges by `η̂` are kept, the rest sampled.
pub fn partial_sparsification(
    g: &Graph,
    eps_prime: f64,
    motifs: &[Motif],
    cfg: &SparsifyConfig,
    round: usize,
) -> Result<(Graph, RoundStats)> {
    cfg.validate()?;
    check_motifs(g, motifs)?;
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::InvalidArgument("eps_prime must lie in (0, 1)"));
    }
    let tracked = motifs.iter().map(|m| track(g, m)).collect::<Result<Vec<_>>>()?;
    let (flags, misses) = strength_round(g, &tracked, motifs, eps_prime, cfg)?;
    let sampler = KeyedSampler::new(cfg.seed);
    let sampling = Sampling { sampler: &sampler, p: keep_probability(r_star_max(motifs)) };
    finish_round(g, round, &flags, &sampling, misses)
}

/// One connectivity-engine round: critical edges by `ν̂` are kept, the rest sampled.
pub fn fast_partial_sparsification(
    g: &Graph,
    eps_prime: f64,
    motifs: &[Motif],
    cfg: &SparsifyConfig,
    round: usize,
) -> Result<(Graph, RoundStats)> {
    cfg.validate()?;
    check_motifs(g, motifs)?;
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::InvalidArgument("eps_prime must lie in (0, 1)"));
    }
    let flags = connectivity_round(g, motifs, eps_prime, cfg)?;
    let sampler = KeyedSampler::new(cfg.seed);
    let sampling = Sampling { sampler: &sampler, p: keep_probability(r_star_max(motifs)) };
    finish_round(g, round, &flags, &sampling, None)
}

/// Full sparsifier of `g` for all `motifs` jointly.
pub fn motif_sparsification(g: &Graph, motifs: &[Motif], cfg: &SparsifyConfig) -> Result<Sparsified> {
    cfg.validate()?;
    check_motifs(g, motifs)?;
    let n = g.n();
    let rs = r_star_max(motifs);
    let p = keep_probability(rs);
    let mut stats = SparsifyStats {
        engine: cfg.engine,
        input_edges: g.m(),
        output_edges: g.m(),
        eps_prime: 0.0,
        rounds: 0,
        rounds_run: 0,
        keep_probability: p,
        thresholds: Vec::new(),
        accuracy_budget_ok: true,
        per_round: Vec::new(),
    };
    if n < 2 || g.m() == 0 {
        return Ok(Sparsified { graph: g.clone(), stats });
    }
    let eps = eps_prime(cfg, n, rs);
    let rounds = round_count(cfg, n, rs);
    stats.eps_prime = eps;
    stats.rounds = rounds;
    stats.accuracy_budget_ok = libm::pow(1.0 + eps, rounds as f64) <= 1.0 + cfg.epsilon;
    stats.thresholds = motifs
        .iter()
        .map(|m| match cfg.engine {
            Engine::Strength => strength_threshold(cfg, eps, m, n),
            Engine::Connectivity => connectivity_threshold(cfg, eps, m, n),
        })
        .collect();

    let sampler = KeyedSampler::new(cfg.seed);
    let sampling = Sampling { sampler: &sampler, p };
    let mut tracked = match cfg.engine {
        Engine::Strength => motifs.iter().map(|m| track(g, m)).collect::<Result<Vec<_>>>()?,
        Engine::Connectivity => Vec::new(),
    };
    // Edge ids of the current graph in the input graph.
    let mut ids: Vec<usize> = (0..g.m()).collect();
    let mut current = g.clone();
    for round in 0..rounds {
        let (flags, misses) = match cfg.engine {
            Engine::Strength => {
                let remap = position_map(g.m(), &ids);
                let local: Vec<Vec<Tracked>> = tracked
                    .iter()
                    .map(|list| list.iter().filter_map(|t| relabel(t, &remap)).collect())
                    .collect();
                let out = strength_round(&current, &local, motifs, eps, cfg)?;
                // Instances that lost an edge are gone for good.
                for list in tracked.iter_mut() {
                    list.retain(|t| t.edge_ids.iter().all(|&e| remap[e] != usize::MAX));
                }
                out
            }
            Engine::Connectivity => (connectivity_round(&current, motifs, eps, cfg)?, None),
        };
        let (next, round_stats) = finish_round(&current, round, &flags, &sampling, misses)?;
        let all_critical = round_stats.critical_union == round_stats.edges_in;
        stats.per_round.push(round_stats);
        stats.rounds_run = round + 1;
        ids = surviving_ids(&current, &next, &ids);
        current = next;
        if all_critical {
            break;
        }
    }
    stats.output_edges = current.m();
    Ok(Sparsified { graph: current, stats })
}

/// `remap[original id]` = index in the current graph, or `usize::MAX` once dropped.
fn position_map(m: usize, ids: &[usize]) -> Vec<usize> {
    let mut remap = alloc::vec![usize::MAX; m];
    for (i, &id) in ids.iter().enumerate() {
        remap[id] = i;
    }
    remap
}

fn relabel(t: &Tracked, remap: &[usize]) -> Option<Tracked> {
    let edge_ids = t.edge_ids.iter().map(|&e| (remap[e] != usize::MAX).then(|| remap[e])).collect::<Option<Vec<_>>>()?;
    Some(Tracked { vertices: t.vertices.clone(), edge_ids })
}

fn surviving_ids(before: &Graph, after: &Graph, ids: &[usize]) -> Vec<usize> {
    before
        .edges()
        .iter()
        .zip(ids)
        .filter(|(e, _)| after.edge_index(e.u, e.v).is_some())
        .map(|(_, &id)| id)
        .collect()
}

/// Whether every edge of `sparse` is an edge of `dense` with weight `w` or `w / p^t`, `t >= 1`.
pub fn is_reweighted_subgraph(dense: &Graph, sparse: &Graph, p: f64) -> bool {
    dense.kind() == sparse.kind()
        && dense.n() == sparse.n()
        && sparse.edges().iter().all(|e| {
            let Some(w) = dense.weight(e.u, e.v) else { return false };
            let ratio = e.w / w;
            if (ratio - 1.0).abs() <= 1e-12 {
                return true;
            }
            let t = libm::round(libm::log(ratio) / libm::log(1.0 / p));
            t >= 1.0 && (ratio / libm::pow(1.0 / p, t) - 1.0).abs() <= 1e-9
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Kind;

    #[test]
    fn schedule_formulas() {
        let cfg = SparsifyConfig { epsilon: 0.3, ..SparsifyConfig::default() };
        assert_eq!(round_count(&cfg, 16, 3), 240);
        assert!((eps_prime(&cfg, 16, 3) - 0.3 / 600.0).abs() < 1e-15);
        assert!((keep_probability(3) - 0.890_898_718_140_339).abs() < 1e-12);
    }

    #[test]
    fn connectivity_threshold_two_ways() {
        let cfg = SparsifyConfig::default();
        let m = Motif::triangle(Kind::Undirected);
        let direct = 0.01 / (256.0 * 20.0 * 9.0 * 3.0 * 4.0 * libm::log(16.0));
        let factored = 0.1 * 0.1 / 256.0 / (11.0 + 3.0 + 6.0) / 9.0 / 3.0 / 4.0 / (4.0 * core::f64::consts::LN_2);
        let got = connectivity_threshold(&cfg, 0.1, &m, 16);
        assert!((got - direct).abs() <= 1e-12 * direct);
        assert!((got - factored).abs() <= 1e-12 * factored);
    }

    #[test]
    fn all_critical_is_identity() {
        let g = generate::clique(6);
        let motifs = [Motif::triangle(Kind::Undirected)];
        for engine in [Engine::Strength, Engine::Connectivity] {
            let cfg = SparsifyConfig { engine, ..SparsifyConfig::default() };
            let out = motif_sparsification(&g, &motifs, &cfg).unwrap();
            assert_eq!(out.graph, g);
            assert_eq!(out.stats.rounds_run, 1);
        }
    }

    #[test]
    fn output_is_reweighted_subgraph() {
        let g = generate::random_graph(8, 0.7, Kind::Undirected, (0.5, 2.0), 1).unwrap();
        let motifs = [Motif::triangle(Kind::Undirected)];
        for engine in [Engine::Strength, Engine::Connectivity] {
            let cfg = SparsifyConfig { engine, ..SparsifyConfig::default() };
            let out = motif_sparsification(&g, &motifs, &cfg).unwrap();
            assert!(is_reweighted_subgraph(&g, &out.graph, out.stats.keep_probability));
        }
    }

    #[test]
    fn single_round_override() {
        let g = generate::clique(6);
        let motifs = [Motif::triangle(Kind::Undirected)];
        let cfg = SparsifyConfig { rounds_override: Some(1), threshold_scale: 1e12, ..SparsifyConfig::default() };
        let out = motif_sparsification(&g, &motifs, &cfg).unwrap();
        assert_eq!(out.stats.rounds, 1);
        assert_eq!(out.stats.per_round.len(), 1);
    }

    #[test]
    fn rejects_bad_config() {
        let g = generate::clique(4);
        let motifs = [Motif::triangle(Kind::Undirected)];
        let cfg = SparsifyConfig { epsilon: 1.5, ..SparsifyConfig::default() };
        assert!(matches!(motif_sparsification(&g, &motifs, &cfg), Err(Error::InvalidConfig(_))));
        let cfg = SparsifyConfig { threshold_scale: 0.5, ..SparsifyConfig::default() };
        assert!(matches!(motif_sparsification(&g, &motifs, &cfg), Err(Error::InvalidConfig(_))));
        assert!(motif_sparsification(&g, &[], &SparsifyConfig::default()).is_err());
    }
}
