//! Motif patterns and their embedded instances.

use alloc::vec::Vec;

use crate::graph::Kind;
use crate::{Error, Result};

/// A small weakly connected pattern graph on vertices `0..r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Motif {
    r: usize,
    kind: Kind,
    edges: Vec<(usize, usize)>,
}

impl Motif {
    pub fn new(r: usize, kind: Kind, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidMotif("a motif needs at least two vertices"));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= r || b >= r {
                return Err(Error::InvalidMotif("edge endpoint out of range"));
            }
            if a == b {
                return Err(Error::InvalidMotif("self-loop"));
            }
            list.push(match kind {
                Kind::Undirected if a > b => (b, a),
                _ => (a, b),
            });
        }
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        if list.len() != before {
            return Err(Error::InvalidMotif("duplicate edge"));
        }
        if list.is_empty() {
            return Err(Error::InvalidMotif("a motif needs at least one edge"));
        }
        let motif = Motif { r, kind, edges: list };
        if !motif.is_weakly_connected() {
            return Err(Error::InvalidMotif("motif is not weakly connected"));
        }
        Ok(motif)
    }

    fn is_weakly_connected(&self) -> bool {
        let mut seen = alloc::vec![false; self.r];
        seen[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in &self.edges {
                if seen[a] != seen[b] {
                    seen[a] = true;
                    seen[b] = true;
                    changed = true;
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Vertex count `r`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Edge count `r*`.
    pub fn r_star(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = match self.kind {
            Kind::Undirected if a > b => (b, a),
            _ => (a, b),
        };
        self.edges.binary_search(&key).is_ok()
    }

    /// Number of edges incident to `a`, ignoring direction.
    pub fn degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|&&(x, y)| x == a || y == a).count()
    }

    pub fn out_degree(&self, a: usize) -> usize {
        match self.kind {
            Kind::Directed => self.edges.iter().filter(|e| e.0 == a).count(),
            Kind::Undirected => self.degree(a),
        }
    }

    pub fn in_degree(&self, a: usize) -> usize {
        match self.kind {
            Kind::Directed => self.edges.iter().filter(|e| e.1 == a).count(),
            Kind::Undirected => self.degree(a),
        }
    }

    /// Single edge.
    pub fn edge(kind: Kind) -> Self {
        Motif { r: 2, kind, edges: alloc::vec![(0, 1)] }
    }

    /// Path with `k` edges: `0 - 1 - ... - k`; directed arcs point forward.
    pub fn path(k: usize, kind: Kind) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidMotif("a path needs at least one edge"));
        }
        Self::new(k + 1, kind, (0..k).map(|i| (i, i + 1)))
    }

    /// Cycle on `k` vertices; directed arcs go `i -> i+1 (mod k)`.
    pub fn cycle(k: usize, kind: Kind) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidMotif("a cycle needs at least three vertices"));
        }
        Self::new(k, kind, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// Clique on `k` vertices; the directed variant is the transitive tournament `i -> j` for `i < j`.
    pub fn clique(k: usize, kind: Kind) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidMotif("a clique needs at least two vertices"));
        }
        Self::new(k, kind, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
    }

    /// Triangle: `clique(3)`; the directed variant is the feed-forward loop.
    pub fn triangle(kind: Kind) -> Self {
        Self::clique(3, kind).expect("triangle is a valid motif")
    }

    /// Preset by name: `edge`, `triangle`, `path2`, `path3`, `cycleK`, `cliqueK` (`K <= 6`).
    pub fn preset(name: &str, kind: Kind) -> Result<Self> {
        match name {
            "edge" => return Ok(Self::edge(kind)),
            "triangle" => return Ok(Self::triangle(kind)),
            "path2" => return Self::path(2, kind),
            "path3" => return Self::path(3, kind),
            _ => {}
        }
        let parse_k = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix).and_then(|rest| rest.parse::<usize>().ok())
        };
        if let Some(k) = parse_k("cycle") {
            if (3..=6).contains(&k) {
                return Self::cycle(k, kind);
            }
        }
        if let Some(k) = parse_k("clique") {
            if (2..=6).contains(&k) {
                return Self::clique(k, kind);
            }
        }
        Err(Error::UnknownMotif)
    }
}

/// An occurrence of a motif in a host graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MotifInstance {
    /// Image of motif vertex `i`.
    pub vertex_map: Vec<usize>,
    /// Mapped host edges `(u, v)`, sorted; undirected edges have `u < v`.
    pub edges: Vec<(usize, usize)>,
    /// Indices of the mapped edges in the host graph the instance was enumerated from.
    pub edge_ids: Vec<usize>,
    /// Product of the mapped edge weights.
    pub weight: f64,
}

impl MotifInstance {
    /// Sorted vertex set of the instance.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs = self.vertex_map.clone();
        vs.sort_unstable();
        vs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_expected_shape() {
        let t = Motif::preset("triangle", Kind::Undirected).unwrap();
        assert_eq!((t.r(), t.r_star()), (3, 3));
        let p = Motif::preset("path2", Kind::Undirected).unwrap();
        assert_eq!((p.r(), p.r_star()), (3, 2));
        let p3 = Motif::preset("path3", Kind::Directed).unwrap();
        assert_eq!((p3.r(), p3.r_star()), (4, 3));
        let c = Motif::preset("cycle4", Kind::Undirected).unwrap();
        assert_eq!((c.r(), c.r_star()), (4, 4));
        let k = Motif::preset("clique5", Kind::Undirected).unwrap();
        assert_eq!((k.r(), k.r_star()), (5, 10));
        assert_eq!(Motif::preset("clique7", Kind::Undirected), Err(Error::UnknownMotif));
        assert_eq!(Motif::preset("star", Kind::Undirected), Err(Error::UnknownMotif));
    }

    #[test]
    fn rejects_disconnected_motif() {
        assert!(matches!(
            Motif::new(4, Kind::Undirected, [(0, 1), (2, 3)]),
            Err(Error::InvalidMotif(_))
        ));
        assert!(matches!(Motif::new(1, Kind::Undirected, []), Err(Error::InvalidMotif(_))));
    }

    #[test]
    fn directed_cycle_orientation() {
        let c = Motif::cycle(3, Kind::Directed).unwrap();
        assert!(c.has_edge(2, 0));
        assert!(!c.has_edge(0, 2));
        assert_eq!(c.out_degree(0), 1);
    }
}
