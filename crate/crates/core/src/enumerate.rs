//! Motif instance enumeration and motif automorphisms.
//!
//! Instances are found by backtracking over a connected ordering of the motif
//! vertices. Every injective homomorphism is visited once; the `A` homomorphisms
//! that differ by a motif automorphism produce the same subgraph and are merged
//! through the key `(sorted vertex set, sorted edge set)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{Graph, Kind};
use crate::motif::{Motif, MotifInstance};
use crate::{Error, Result};

pub const DEFAULT_INSTANCE_LIMIT: usize = 10_000_000;

/// Largest motif accepted by [`automorphism_count`].
pub const AUTOMORPHISM_LIMIT: usize = 10;

fn check_kinds(g: &Graph, m: &Motif) -> Result<()> {
    if g.kind() != m.kind() {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

struct Plan {
    order: Vec<usize>,
    // For depth i > 0, a motif vertex placed earlier and adjacent to order[i].
    anchor: Vec<usize>,
    // For depth i, motif edges to earlier vertices: (other vertex, order[i] is the source).
    checks: Vec<Vec<(usize, bool)>>,
}

fn plan(m: &Motif) -> Plan {
    let r = m.r();
    let mut placed = alloc::vec![false; r];
    let first = (0..r).max_by_key(|&a| (m.degree(a), core::cmp::Reverse(a))).unwrap_or(0);
    let mut order = alloc::vec![first];
    placed[first] = true;
    while order.len() < r {
        let next = (0..r)
            .filter(|&a| !placed[a])
            .max_by_key(|&a| {
                let links = m.edges().iter().filter(|&&(x, y)| (x == a && placed[y]) || (y == a && placed[x])).count();
                (links, m.degree(a), core::cmp::Reverse(a))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let mut anchor = alloc::vec![usize::MAX; r];
    let mut checks = alloc::vec![Vec::new(); r];
    for i in 0..r {
        let a = order[i];
        for &b in &order[..i] {
            if (m.has_edge(a, b) || m.has_edge(b, a))
                && anchor[i] == usize::MAX {
                    anchor[i] = b;
                }
            match m.kind() {
                Kind::Undirected => {
                    if m.has_edge(a, b) {
                        checks[i].push((b, true));
                    }
                }
                Kind::Directed => {
                    if m.has_edge(a, b) {
                        checks[i].push((b, true));
                    }
                    if m.has_edge(b, a) {
                        checks[i].push((b, false));
                    }
                }
            }
        }
    }
    Plan { order, anchor, checks }
}

/// Calls `visit` with every injective homomorphism `motif vertex -> graph vertex`.
fn for_each_embedding(g: &Graph, m: &Motif, mut visit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let plan = plan(m);
    let r = m.r();
    let mut image = alloc::vec![usize::MAX; r];
    let mut used = alloc::vec![false; g.n()];
    let mut candidates: Vec<Vec<usize>> = alloc::vec![Vec::new(); r];
    let mut cursor = alloc::vec![0usize; r];

    let fill = |depth: usize, image: &[usize], out: &mut Vec<usize>| {
        out.clear();
        if depth == 0 {
            out.extend(0..g.n());
        } else {
            out.extend_from_slice(g.neighbors(image[plan.anchor[depth]]));
        }
    };

    let fits = |depth: usize, c: usize, image: &[usize], used: &[bool]| -> bool {
        let a = plan.order[depth];
        if used[c] || g.out_degree(c) < m.out_degree(a) || g.in_degree(c) < m.in_degree(a) {
            return false;
        }
        plan.checks[depth].iter().all(|&(b, forward)| {
            let other = image[b];
            if forward {
                g.edge_index(c, other).is_some()
            } else {
                g.edge_index(other, c).is_some()
            }
        })
    };

    if r == 0 || g.n() < r {
        return Ok(());
    }
    let mut depth = 0usize;
    fill(0, &image, &mut candidates[0]);
    cursor[0] = 0;
    loop {
        // Advance the cursor at `depth` to the next fitting candidate.
        let mut chosen = None;
        while cursor[depth] < candidates[depth].len() {
            let c = candidates[depth][cursor[depth]];
            cursor[depth] += 1;
            if fits(depth, c, &image, &used) {
                chosen = Some(c);
                break;
            }
        }
        match chosen {
            None => {
                if depth == 0 {
                    return Ok(());
                }
                depth -= 1;
                let a = plan.order[depth];
                used[image[a]] = false;
                image[a] = usize::MAX;
            }
            Some(c) => {
                let a = plan.order[depth];
                image[a] = c;
                if depth + 1 == r {
                    visit(&image)?;
                    image[a] = usize::MAX;
                } else {
                    used[c] = true;
                    depth += 1;
                    fill(depth, &image, &mut candidates[depth]);
                    cursor[depth] = 0;
                }
            }
        }
    }
}

fn mapped_edge_ids(g: &Graph, m: &Motif, image: &[usize]) -> Vec<usize> {
    let mut ids: Vec<usize> = m
        .edges()
        .iter()
        .map(|&(a, b)| g.edge_index(image[a], image[b]).expect("embedding maps edges to edges"))
        .collect();
    ids.sort_unstable();
    ids
}

fn instance_from(g: &Graph, vertex_map: Vec<usize>, edge_ids: Vec<usize>) -> MotifInstance {
    let edges = edge_ids.iter().map(|&i| (g.edges()[i].u, g.edges()[i].v)).collect();
    let weight = edge_ids.iter().map(|&i| g.edges()[i].w).product();
    MotifInstance { vertex_map, edges, edge_ids, weight }
}

/// All (non-induced) instances of `m` in `g`, one per distinct subgraph, in
/// lexicographic order of (sorted vertex set, sorted edge set).
pub fn enumerate_instances(g: &Graph, m: &Motif) -> Result<Vec<MotifInstance>> {
    enumerate_instances_with_limit(g, m, DEFAULT_INSTANCE_LIMIT)
}

pub fn enumerate_instances_with_limit(g: &Graph, m: &Motif, limit: usize) -> Result<Vec<MotifInstance>> {
    check_kinds(g, m)?;
    let mut found: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for_each_embedding(g, m, |image| {
        let mut vs = image.to_vec();
        vs.sort_unstable();
        let ids = mapped_edge_ids(g, m, image);
        if let alloc::collections::btree_map::Entry::Vacant(slot) = found.entry((vs, ids)) {
            slot.insert(image.to_vec());
            if found.len() > limit {
                return Err(Error::EnumerationLimit { limit });
            }
        }
        Ok(())
    })?;
    Ok(found
        .into_iter()
        .map(|((_, ids), image)| instance_from(g, image, ids))
        .collect())
}

/// Instances whose vertex set induces exactly the instance edges.
pub fn enumerate_induced_instances(g: &Graph, m: &Motif) -> Result<Vec<MotifInstance>> {
    let all = enumerate_instances(g, m)?;
    Ok(all
        .into_iter()
        .filter(|inst| induced_edge_count(g, &inst.vertex_map) == m.r_star())
        .collect())
}

fn induced_edge_count(g: &Graph, vertices: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            count += usize::from(g.edge_index(a, b).is_some());
            if g.is_directed() {
                count += usize::from(g.edge_index(b, a).is_some());
            }
        }
    }
    count
}

/// Number of vertex permutations of `m` that map its edge set onto itself.
pub fn automorphism_count(m: &Motif) -> Result<u64> {
    let r = m.r();
    if r > AUTOMORPHISM_LIMIT {
        return Err(Error::MotifTooLarge { r, limit: AUTOMORPHISM_LIMIT });
    }
    let mut perm: Vec<usize> = (0..r).collect();
    let preserves = |p: &[usize]| m.edges().iter().all(|&(a, b)| m.has_edge(p[a], p[b]));
    let mut count = u64::from(preserves(&perm));
    // Heap's algorithm.
    let mut c = alloc::vec![0usize; r];
    let mut i = 1;
    while i < r {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(preserves(&perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}
