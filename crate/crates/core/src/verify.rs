//! Brute-force oracles, cut error measurement and the induced-motif lab.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::connectivity::{edge_connectivities, FlowTree};
use crate::enumerate::{automorphism_count, enumerate_induced_instances, enumerate_instances};
use crate::generate;
use crate::graph::{Cut, Graph, Kind, DEFAULT_CUT_LIMIT};
use crate::hypergraph::{
    build_motif_hypergraph, estimate_strengths_with, exact_strengths_with_limit, EstimateOptions, MotifHypergraph,
    STRENGTH_SUM_CONSTANT,
};
use crate::motif::{Motif, MotifInstance};
use crate::sampling::{next_unit, rng, KeyedSampler};
use crate::sparsify::layered_importance;
use crate::weights::{build_sigma_graph, motif_weighted_graph, motif_weights_fast, motif_weights_naive};
use crate::{Error, Result};

/// Largest `n` for [`instance_connectivity`].
pub const CONNECTIVITY_LIMIT: usize = 16;
/// Largest `n` for [`brute_force_strengths`].
pub const STRENGTH_ORACLE_LIMIT: usize = 10;
/// Largest `n` for [`check_invariants`].
pub const INVARIANT_LIMIT: usize = 14;
/// Error level the lower-bound search tries to reach.
pub const LOWER_BOUND_TARGET: f64 = 1.0 / 500.0;

const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        }
    }
}

/// Which instances count toward cut values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counting {
    All,
    Induced,
}

/// One checked property; `slack` is the margin to failure, positive when passing.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub pass: bool,
    pub slack: f64,
}

impl InvariantCheck {
    fn new(name: &'static str, slack: f64) -> Self {
        InvariantCheck { name, pass: slack >= 0.0, slack }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_relative_error: f64,
    pub argmax_cut: Option<Cut>,
    pub cuts_checked: u64,
    pub mode: Mode,
    pub invariants: Vec<InvariantCheck>,
}

impl VerificationReport {
    pub fn within(&self, epsilon: f64) -> bool {
        self.max_relative_error <= epsilon
    }

    pub fn all_pass(&self) -> bool {
        self.invariants.iter().all(|c| c.pass)
    }

    pub fn invariant(&self, name: &str) -> Option<&InvariantCheck> {
        self.invariants.iter().find(|c| c.name == name)
    }
}

/// `|b - a| / a`, infinite when only `a` is zero.
pub fn relative_error(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        if b == 0.0 { 0.0 } else { f64::INFINITY }
    } else {
        libm::fabs(b - a) / a
    }
}

fn instances(g: &Graph, m: &Motif, counting: Counting) -> Result<Vec<MotifInstance>> {
    match counting {
        Counting::All => enumerate_instances(g, m),
        Counting::Induced => enumerate_induced_instances(g, m),
    }
}

/// Instance weights merged by vertex set, as bitmasks.
fn masks(list: &[MotifInstance]) -> Vec<(u64, f64)> {
    let mut merged: BTreeMap<u64, f64> = BTreeMap::new();
    for inst in list {
        let mask = inst.vertex_map.iter().fold(0u64, |m, &v| m | 1 << v);
        *merged.entry(mask).or_insert(0.0) += inst.weight;
    }
    merged.into_iter().collect()
}

fn crossing(mask: u64, side: u64) -> bool {
    mask & side != 0 && mask & !side != 0
}

fn mask_value(sets: &[(u64, f64)], side: u64) -> f64 {
    sets.iter().filter(|(m, _)| crossing(*m, side)).map(|(_, w)| w).sum()
}

fn check_pair(g: &Graph, g_hat: &Graph) -> Result<()> {
    if g.n() != g_hat.n() {
        return Err(Error::InvalidArgument("graphs differ in vertex count"));
    }
    if g.kind() != g_hat.kind() {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// Exhaustive maximum relative motif cut error of `g_hat` against `g`.
pub fn max_cut_error(g: &Graph, g_hat: &Graph, m: &Motif) -> Result<VerificationReport> {
    max_cut_error_with(g, g_hat, core::slice::from_ref(m), Counting::All)
}

/// Exhaustive error over all cuts and all motifs, each motif compared on its own.
pub fn max_cut_error_with(g: &Graph, g_hat: &Graph, motifs: &[Motif], counting: Counting) -> Result<VerificationReport> {
    check_pair(g, g_hat)?;
    let n = g.n();
    if n > DEFAULT_CUT_LIMIT {
        return Err(Error::CutLimit { n, limit: DEFAULT_CUT_LIMIT });
    }
    let mut pairs = Vec::new();
    for m in motifs {
        pairs.push((masks(&instances(g, m, counting)?), masks(&instances(g_hat, m, counting)?)));
    }
    let total: u64 = if n < 2 { 0 } else { (1u64 << (n - 1)) - 1 };
    let mut worst = (0.0f64, None::<u64>);
    for half in 0..total {
        let side = half << 1 | 1;
        for (a, b) in &pairs {
            let err = relative_error(mask_value(a, side), mask_value(b, side));
            if err > worst.0 || (worst.1.is_none() && err == worst.0) {
                worst = (err, Some(side));
            }
        }
    }
    Ok(VerificationReport {
        max_relative_error: worst.0,
        argmax_cut: worst.1.map(|s| Cut::from_mask(n, s).expect("proper cut")),
        cuts_checked: total,
        mode: Mode::Exhaustive,
        invariants: Vec::new(),
    })
}

/// Error over all singleton cuts plus `samples` uniform random cuts.
pub fn sampled_cut_error(g: &Graph, g_hat: &Graph, m: &Motif, samples: usize, seed: u64) -> Result<VerificationReport> {
    sampled_cut_error_with(g, g_hat, core::slice::from_ref(m), Counting::All, samples, seed)
}

pub fn sampled_cut_error_with(
    g: &Graph,
    g_hat: &Graph,
    motifs: &[Motif],
    counting: Counting,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    check_pair(g, g_hat)?;
    if samples == 0 {
        return Err(Error::InvalidArgument("at least one sampled cut is required"));
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("cuts need at least two vertices"));
    }
    let mut pairs = Vec::new();
    for m in motifs {
        let a = instances(g, m, counting)?;
        let b = instances(g_hat, m, counting)?;
        pairs.push((
            MotifHypergraph::from_sets(n, a.iter().map(|i| (i.vertex_set(), i.weight)))?,
            MotifHypergraph::from_sets(n, b.iter().map(|i| (i.vertex_set(), i.weight)))?,
        ));
    }
    let mut cuts: Vec<Cut> = (0..n).map(|v| Cut::from_sorted_unchecked(alloc::vec![v])).collect();
    let sampler = KeyedSampler::new(seed);
    let mut attempt = 0u64;
    while cuts.len() < n + samples {
        attempt += 1;
        let side: Vec<usize> = (0..n).filter(|&v| sampler.draw(attempt, v as u64) & 1 == 1).collect();
        if !side.is_empty() && side.len() < n {
            cuts.push(Cut::from_sorted_unchecked(side));
        }
    }
    let mut worst = (0.0f64, 0usize);
    for (i, cut) in cuts.iter().enumerate() {
        let flags = cut.membership(n);
        for (a, b) in &pairs {
            let err = relative_error(a.cut_value(&flags), b.cut_value(&flags));
            if err > worst.0 {
                worst = (err, i);
            }
        }
    }
    Ok(VerificationReport {
        max_relative_error: worst.0,
        argmax_cut: Some(cuts[worst.1].canonical(n)),
        cuts_checked: cuts.len() as u64,
        mode: Mode::Sampled,
        invariants: Vec::new(),
    })
}

/// Exact `k_I` of every instance: the smallest motif cut value among cuts crossing it.
pub fn instance_connectivities(n: usize, list: &[MotifInstance]) -> Result<Vec<f64>> {
    if n > CONNECTIVITY_LIMIT {
        return Err(Error::CutLimit { n, limit: CONNECTIVITY_LIMIT });
    }
    let sets = masks(list);
    let own: Vec<u64> = list.iter().map(|i| i.vertex_map.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let mut best = alloc::vec![f64::INFINITY; list.len()];
    let total: u64 = if n < 2 { 0 } else { (1u64 << (n - 1)) - 1 };
    for half in 0..total {
        let side = half << 1 | 1;
        let value = mask_value(&sets, side);
        for (b, &mask) in best.iter_mut().zip(&own) {
            if value < *b && crossing(mask, side) {
                *b = value;
            }
        }
    }
    Ok(best)
}

/// Exact `k_I` of one instance of `m` in `g`.
pub fn instance_connectivity(g: &Graph, m: &Motif, inst: &MotifInstance) -> Result<f64> {
    let list = enumerate_instances(g, m)?;
    let at = list
        .iter()
        .position(|i| i.edge_ids == inst.edge_ids)
        .ok_or(Error::InvalidArgument("instance does not occur in the graph"))?;
    Ok(instance_connectivities(g.n(), &list)?[at])
}

/// Definitional strengths: for each hyperedge, the largest minimum cut over all
/// induced subhypergraphs containing it.
pub fn brute_force_strengths(h: &MotifHypergraph) -> Result<Vec<f64>> {
    let n = h.n();
    if n > STRENGTH_ORACLE_LIMIT {
        return Err(Error::ExactLimit { n, limit: STRENGTH_ORACLE_LIMIT });
    }
    let sets: Vec<(u64, f64)> = h
        .hyperedges()
        .iter()
        .map(|f| (f.vertices.iter().fold(0u64, |m, &v| m | 1 << v), f.weight))
        .collect();
    let mut kappa = alloc::vec![0.0f64; sets.len()];
    for d in 1u64..1 << n {
        if d.count_ones() < 2 {
            continue;
        }
        let inside: Vec<(u64, f64)> = sets.iter().copied().filter(|(m, _)| m & !d == 0).collect();
        if inside.is_empty() {
            continue;
        }
        let low = d & d.wrapping_neg();
        let rest = d ^ low;
        let mut min_cut = f64::INFINITY;
        // Sides containing the lowest vertex of `d`, excluding `d` itself.
        let mut sub = rest;
        loop {
            let side = sub | low;
            if side != d {
                let value: f64 =
                    inside.iter().filter(|(m, _)| m & side != 0 && m & (d ^ side) != 0).map(|(_, w)| w).sum();
                min_cut = min_cut.min(value);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        for (k, (m, _)) in kappa.iter_mut().zip(&sets) {
            if m & !d == 0 && min_cut > *k {
                *k = min_cut;
            }
        }
    }
    Ok(kappa)
}

/// The clique on `n >= 6` vertices without the triangle `{0, 1, 2}`.
pub fn build_delta_minus(n: usize) -> Result<Graph> {
    generate::delta_minus(n)
}

/// The clique-minus-edge pair and the exhaustive induced 2-path error of `g_hat`.
pub fn clique_minus_edge_example(n: usize) -> Result<(Graph, Graph, VerificationReport)> {
    let (g, g_hat) = generate::clique_minus_edge_pair(n)?;
    let path = Motif::path(2, Kind::Undirected)?;
    let report = max_cut_error_with(&g, &g_hat, &[path], Counting::Induced)?;
    Ok((g, g_hat, report))
}

/// Induced 2-path weight of a graph on the vertex set of `Δ⁻`, split by the
/// number of special vertices `{0, 1, 2}` in each instance.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphletProfile {
    pub by_special_count: [f64; 4],
    /// `27 ε n`.
    pub bound: f64,
    /// Whether the weight outside two-special instances is within the bound.
    pub holds: bool,
}

pub fn graphlet_profile(g_hat: &Graph, epsilon: f64) -> Result<GraphletProfile> {
    let path = Motif::path(2, Kind::Undirected)?;
    let mut by = [0.0; 4];
    for inst in enumerate_induced_instances(g_hat, &path)? {
        let special = inst.vertex_map.iter().filter(|&&v| v < 3).count();
        by[special] += inst.weight;
    }
    let bound = 27.0 * epsilon * g_hat.n() as f64;
    Ok(GraphletProfile { by_special_count: by, bound, holds: by[0] + by[1] + by[3] <= bound })
}

/// Outcome of the randomized search for sparse reweighted subgraphs of `Δ⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundLab {
    pub n: usize,
    pub trials: usize,
    pub max_edges: usize,
    pub best_error: f64,
    pub best_edges: usize,
    /// Whether a candidate reached [`LOWER_BOUND_TARGET`].
    pub found: bool,
}

/// Heuristic evidence only: samples subgraphs of `Δ⁻(n)` with at most `n` edges and
/// grid weights, and reports the smallest exhaustive induced 2-path cut error seen.
pub fn lower_bound_search(n: usize, trials: usize, seed: u64) -> Result<LowerBoundLab> {
    const GRID: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
    let g = build_delta_minus(n)?;
    let path = [Motif::path(2, Kind::Undirected)?];
    let mut r = rng(seed);
    let mut best = (f64::INFINITY, 0usize);
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for _ in 0..trials {
        let k = 1 + (next_unit(&mut r) * n as f64) as usize;
        let mut pool = edges.clone();
        let mut chosen = Vec::with_capacity(k);
        for _ in 0..k.min(pool.len()) {
            let at = (next_unit(&mut r) * pool.len() as f64) as usize;
            let (u, v) = pool.swap_remove(at);
            let w = GRID[(next_unit(&mut r) * GRID.len() as f64) as usize];
            chosen.push((u, v, w));
        }
        let g_hat = Graph::new(n, Kind::Undirected, chosen)?;
        let err = max_cut_error_with(&g, &g_hat, &path, Counting::Induced)?.max_relative_error;
        if err < best.0 {
            best = (err, g_hat.m());
        }
    }
    Ok(LowerBoundLab {
        n,
        trials,
        max_edges: n,
        best_error: best.0,
        best_edges: best.1,
        found: best.0 <= LOWER_BOUND_TARGET,
    })
}

fn rel_gap(a: f64, b: f64) -> f64 {
    libm::fabs(a - b) / libm::fmax(1.0, libm::fmax(libm::fabs(a), libm::fabs(b)))
}

/// Runs the exact pipeline on `g` and `m` and checks every structural property.
///
/// Checks: cut transfer to the motif hypergraph, exact strengths against the
/// definition (`n <= 10`), the component sum bound, the unit strength-normalized
/// minimum cut, laminarity, strength estimates, fast motif weights, the
/// homomorphism count, both sandwich bounds for the motif-weighted graph,
/// the layered importance bounds, `k_I >= κ_I`, and the flow tree.
pub fn check_invariants(g: &Graph, m: &Motif) -> Result<VerificationReport> {
    let n = g.n();
    if n > INVARIANT_LIMIT {
        return Err(Error::CutLimit { n, limit: INVARIANT_LIMIT });
    }
    if n < 2 {
        return Err(Error::InvalidArgument("invariants need at least two vertices"));
    }
    let list = enumerate_instances(g, m)?;
    let h = build_motif_hypergraph(g, &list);
    let (exact, components) = exact_strengths_with_limit(&h, usize::MAX)?;
    let estimate = estimate_strengths_with(&h, EstimateOptions { exact_limit: 0 })?;
    let fast = motif_weights_fast(g, m)?;
    let naive = motif_weights_naive(g, m)?;
    let gm = motif_weighted_graph(g, &naive);
    let r_star = m.r_star() as f64;

    let inst_sets = masks(&list);
    let hyper: Vec<(u64, f64, f64)> = h
        .hyperedges()
        .iter()
        .zip(&exact.hyperedge)
        .map(|(f, &k)| (f.vertices.iter().fold(0u64, |a, &v| a | 1 << v), f.weight, k))
        .collect();
    let own: Vec<u64> = list.iter().map(|i| i.vertex_map.iter().fold(0u64, |a, &v| a | 1 << v)).collect();

    let total = (1u64 << (n - 1)) - 1;
    let mut transfer_gap = 0.0f64;
    let mut sandwich = f64::INFINITY;
    let mut normalized_min = f64::INFINITY;
    let mut k_inst = alloc::vec![f64::INFINITY; list.len()];
    let mut k_edge = alloc::vec![f64::INFINITY; g.m()];
    for half in 0..total {
        let side = half << 1 | 1;
        let val = mask_value(&inst_sets, side);
        let hval: f64 = hyper.iter().filter(|(s, _, _)| crossing(*s, side)).map(|(_, w, _)| w).sum();
        transfer_gap = transfer_gap.max(rel_gap(val, hval));
        let gm_val: f64 = gm.edges().iter().filter(|e| (side >> e.u & 1) != (side >> e.v & 1)).map(|e| e.w).sum();
        sandwich = sandwich.min(gm_val - val + TOLERANCE * (1.0 + val)).min(r_star * val - gm_val + TOLERANCE * (1.0 + val));
        let normalized: f64 = hyper.iter().filter(|(s, _, _)| crossing(*s, side)).map(|(_, w, k)| w / k).sum();
        normalized_min = normalized_min.min(normalized);
        for (k, &mask) in k_inst.iter_mut().zip(&own) {
            if val < *k && crossing(mask, side) {
                *k = val;
            }
        }
        for (k, e) in k_edge.iter_mut().zip(g.edges()) {
            if gm_val < *k && (side >> e.u & 1) != (side >> e.v & 1) {
                *k = gm_val;
            }
        }
    }

    let mut checks = Vec::new();
    checks.push(InvariantCheck::new("cut_transfer", TOLERANCE - transfer_gap));

    if n <= STRENGTH_ORACLE_LIMIT {
        let oracle = brute_force_strengths(&h)?;
        let gap = oracle.iter().zip(&exact.hyperedge).map(|(a, b)| rel_gap(*a, *b)).fold(0.0, f64::max);
        checks.push(InvariantCheck::new("strength_oracle", TOLERANCE - gap));
    }

    let comps = h.component_count() as f64;
    checks.push(InvariantCheck::new(
        "conn_sum_bound",
        (n as f64 - comps) - exact.normalized_weight(&h) + TOLERANCE,
    ));

    let unit_slack = if h.hyperedges().is_empty() || normalized_min <= TOLERANCE {
        TOLERANCE
    } else {
        TOLERANCE - libm::fabs(normalized_min - 1.0)
    };
    checks.push(InvariantCheck::new("weighted_cut_size", unit_slack));

    checks.push(InvariantCheck::new("laminarity", if laminar(&components) { 0.0 } else { -1.0 }));

    let below = exact
        .hyperedge
        .iter()
        .zip(&estimate.hyperedge)
        .map(|(k, e)| k * (1.0 + TOLERANCE) - e)
        .fold(f64::INFINITY, f64::min);
    checks.push(InvariantCheck::new("estimate_below_exact", if below.is_finite() { below } else { 0.0 }));
    let est_bound = STRENGTH_SUM_CONSTANT * h.rank() as f64 * (n - 1) as f64;
    checks.push(InvariantCheck::new("estimate_sum_bound", est_bound - estimate.normalized_weight(&h)));

    let fast_gap = fast.iter().zip(&naive).map(|(a, b)| rel_gap(*a, *b)).fold(0.0, f64::max);
    checks.push(InvariantCheck::new("weights_fast_naive", TOLERANCE - fast_gap));

    if m.r() >= 3 {
        let sigma = build_sigma_graph(g, m)?;
        let per_hom = sigma.triangle_weights().total() / automorphism_count(m)? as f64;
        let direct: f64 = list.iter().map(|i| i.weight).sum();
        checks.push(InvariantCheck::new("homomorphism_count", TOLERANCE - rel_gap(per_hom, direct)));
    }

    checks.push(InvariantCheck::new("cut_sandwich", sandwich.min(TOLERANCE)));

    // μ(I) = w(I)/k_I and ν(I) = w(I) r* / min_{e ∈ I} k_e.
    let nu: Vec<f64> = list
        .iter()
        .map(|i| i.weight * r_star / i.edge_ids.iter().map(|&e| k_edge[e]).fold(f64::INFINITY, f64::min))
        .collect();
    let mut mu_nu = TOLERANCE;
    for ((inst, &k), &v) in list.iter().zip(&k_inst).zip(&nu) {
        let mu = inst.weight / k;
        mu_nu = mu_nu.min(v - mu + TOLERANCE * mu).min(r_star * mu - v + TOLERANCE * mu);
    }
    checks.push(InvariantCheck::new("mu_nu_sandwich", mu_nu));

    let conn: Vec<f64> = k_edge.iter().map(|&k| if k.is_finite() { k } else { 0.0 }).collect();
    let nu_hat = layered_importance(g, m, &conn)?;
    let mut nu_edge = alloc::vec![0.0; g.m()];
    for (inst, &v) in list.iter().zip(&nu) {
        for &e in &inst.edge_ids {
            nu_edge[e] += v;
        }
    }
    let mut hat_slack = TOLERANCE;
    for (&a, &b) in nu_edge.iter().zip(&nu_hat) {
        hat_slack = hat_slack.min(b - a + TOLERANCE * a).min(2.0 * a - b + TOLERANCE * a);
    }
    checks.push(InvariantCheck::new("nu_hat_sandwich", hat_slack));

    let mut conn_slack = TOLERANCE;
    for (&k, &kappa) in k_inst.iter().zip(&exact.instance) {
        conn_slack = conn_slack.min(k - kappa + TOLERANCE * kappa);
    }
    checks.push(InvariantCheck::new("connectivity_at_least_strength", conn_slack));

    let flow = edge_connectivities(g, &gm)?;
    let tree = FlowTree::build(&gm).all_pairs();
    let mut flow_gap = 0.0f64;
    for ((e, &f), &k) in g.edges().iter().zip(&flow).zip(&conn) {
        flow_gap = flow_gap.max(rel_gap(f, k)).max(rel_gap(tree[e.u * n + e.v], k));
    }
    checks.push(InvariantCheck::new("flow_tree_exact", TOLERANCE - flow_gap));

    Ok(VerificationReport {
        max_relative_error: 0.0,
        argmax_cut: None,
        cuts_checked: total,
        mode: Mode::Exhaustive,
        invariants: checks,
    })
}

/// Whether every two vertex sets are disjoint or nested.
pub fn laminar(components: &[crate::hypergraph::Component]) -> bool {
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            let shared = a.vertices.iter().filter(|v| b.vertices.binary_search(v).is_ok()).count();
            if shared != 0 && shared != a.vertices.len() && shared != b.vertices.len() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_has_zero_error() {
        let g = generate::random_graph(8, 0.6, Kind::Undirected, (0.5, 2.0), 2).unwrap();
        let m = Motif::triangle(Kind::Undirected);
        let r = max_cut_error(&g, &g, &m).unwrap();
        assert_eq!(r.max_relative_error, 0.0);
        assert_eq!(r.cuts_checked, 127);
        assert_eq!(sampled_cut_error(&g, &g, &m, 10, 1).unwrap().max_relative_error, 0.0);
    }

    #[test]
    fn lost_and_new_instances() {
        let g = generate::clique(4);
        let empty = Graph::empty(4, Kind::Undirected);
        let m = Motif::triangle(Kind::Undirected);
        assert_eq!(max_cut_error(&g, &empty, &m).unwrap().max_relative_error, 1.0);
        assert_eq!(max_cut_error(&empty, &g, &m).unwrap().max_relative_error, f64::INFINITY);
    }

    #[test]
    fn k4_connectivities() {
        let g = generate::clique(4);
        let list = enumerate_instances(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        assert_eq!(instance_connectivities(4, &list).unwrap(), vec![3.0; 4]);
    }

    #[test]
    fn isolated_triangle_connectivity() {
        let g = Graph::new(5, Kind::Undirected, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (3, 4, 1.0)]).unwrap();
        let m = Motif::triangle(Kind::Undirected);
        let inst = enumerate_instances(&g, &m).unwrap().remove(0);
        assert_eq!(instance_connectivity(&g, &m, &inst).unwrap(), 1.0);
    }

    #[test]
    fn sampled_needs_samples() {
        let g = generate::clique(4);
        assert!(sampled_cut_error(&g, &g, &Motif::triangle(Kind::Undirected), 0, 0).is_err());
    }

    #[test]
    fn laminarity_detects_crossing_sets() {
        use crate::hypergraph::Component;
        let c = |v: Vec<usize>| Component { vertices: v, min_cut: 1.0 };
        assert!(laminar(&[c(vec![0, 1, 2]), c(vec![0, 1]), c(vec![3, 4])]));
        assert!(!laminar(&[c(vec![0, 1]), c(vec![1, 2])]));
    }

    #[test]
    fn k4_invariants_pass() {
        let g = generate::clique(4);
        let r = check_invariants(&g, &Motif::triangle(Kind::Undirected)).unwrap();
        assert!(r.all_pass(), "{:?}", r.invariants);
        // n - C = 3 and Σ w/κ = 4/3.
        let s = r.invariant("conn_sum_bound").unwrap().slack;
        assert!((s - 5.0 / 3.0).abs() < 1e-6);
    }
}
