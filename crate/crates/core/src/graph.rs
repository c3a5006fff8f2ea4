//! Simple undirected graphs stored as bit rows, plus BFS metrics.
//!
//! Each row is a run of `u64` words, so a graph with at most 64 vertices
//! keeps one machine word per vertex; larger graphs use more words per row
//! through the same code path.

use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate; only `u < v` is queried.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1 || (n > 2 && u == 0 && v == n - 1))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (wu, bu) = (u / 64, u % 64);
        let (wv, bv) = (v / 64, v % 64);
        if on {
            self.rows[u * self.words + wv] |= 1 << bv;
            self.rows[v * self.words + wu] |= 1 << bu;
        } else {
            self.rows[u * self.words + wv] &= !(1 << bv);
            self.rows[v * self.words + wu] &= !(1 << bu);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Single-word neighbourhood mask; only meaningful for `n <= 64`.
    #[inline]
    pub fn row_mask(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, in ascending order.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if assigned[s] {
                continue;
            }
            let comp = self.component_of(s);
            for &v in &comp {
                assigned[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        self.induced(order)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Adds a vertex `n` adjacent to every existing vertex.
    pub fn cone(&self) -> Graph {
        let n = self.n;
        Graph::from_fn(n + 1, |u, v| v == n || self.has_edge(u, v))
    }

    /// Vertices of degree `n - 1`.
    pub fn universal_vertices(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        (0..self.n).filter(|&u| self.degree(u) == self.n - 1).collect()
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::of(self)
    }

    pub fn eccentricity_profile(&self) -> Result<EccentricityProfile> {
        EccentricityProfile::from_distances(&self.distance_matrix())
    }

    pub fn is_self_centered(&self) -> Result<bool> {
        let p = self.eccentricity_profile()?;
        Ok(p.radius == p.diameter)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// All-pairs hop counts. Disconnected pairs hold [`DistanceMatrix::UNREACHABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![Self::UNREACHABLE; n * n];
        if n <= 64 {
            for s in 0..n {
                let row = &mut d[s * n..(s + 1) * n];
                let mut visited = 1u64 << s;
                let mut frontier = visited;
                let mut level = 0;
                while frontier != 0 {
                    for v in BitIter(frontier) {
                        row[v] = level;
                    }
                    let mut next = 0u64;
                    for v in BitIter(frontier) {
                        next |= g.row_mask(v);
                    }
                    next &= !visited;
                    visited |= next;
                    frontier = next;
                    level += 1;
                }
            }
        } else {
            let mut queue = std::collections::VecDeque::new();
            for s in 0..n {
                let row = &mut d[s * n..(s + 1) * n];
                row[s] = 0;
                queue.push_back(s);
                while let Some(u) = queue.pop_front() {
                    let du = row[u];
                    for v in g.neighbors(u) {
                        if row[v] == Self::UNREACHABLE {
                            row[v] = du + 1;
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }
}

/// Per-vertex eccentricities with diameter and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
}

impl EccentricityProfile {
    pub fn from_distances(d: &DistanceMatrix) -> Result<Self> {
        if !d.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let ecc: Vec<u32> = (0..d.n()).map(|u| d.row(u).iter().copied().max().unwrap_or(0)).collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        Ok(EccentricityProfile { ecc, diameter, radius })
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    #[test]
    fn complete_graph_distances() {
        let d = Graph::complete(3).distance_matrix();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn path_distances() {
        let d = Graph::path(4).distance_matrix();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(3, 0), 3);
    }

    #[test]
    fn disconnected_pair_is_unreachable() {
        let g = Graph::empty(2);
        let d = g.distance_matrix();
        assert_eq!(d.get(0, 1), DistanceMatrix::UNREACHABLE);
        assert_eq!(g.eccentricity_profile(), Err(Error::DisconnectedGraph));
        assert_eq!(g.is_self_centered(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn star_profile() {
        let p = star(3).eccentricity_profile().unwrap();
        assert_eq!(p.ecc, vec![1, 2, 2, 2]);
        assert_eq!((p.diameter, p.radius), (2, 1));
    }

    #[test]
    fn cycle_and_path_profiles() {
        let p = Graph::cycle(4).eccentricity_profile().unwrap();
        assert_eq!(p.ecc, vec![2; 4]);
        assert!(p.is_self_centered());
        let p = Graph::path(4).eccentricity_profile().unwrap();
        assert_eq!(p.ecc, vec![3, 2, 2, 3]);
    }

    #[test]
    fn self_centered_examples() {
        assert!(Graph::cycle(5).is_self_centered().unwrap());
        assert!(!star(3).is_self_centered().unwrap());
        assert!(Graph::complete(4).is_self_centered().unwrap());
    }

    #[test]
    fn universal_vertex_examples() {
        assert_eq!(star(3).universal_vertices(), vec![0]);
        assert!(Graph::cycle(4).universal_vertices().is_empty());
        assert_eq!(Graph::complete(4).universal_vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c = Graph::cycle(4).complement();
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn cone_examples() {
        let c = Graph::empty(3).cone();
        assert_eq!(c.universal_vertices(), vec![3]);
        assert_eq!(c.edge_count(), 3);
        assert_eq!(Graph::complete(3).cone(), Graph::complete(4));
        let fan = Graph::path(4).cone();
        assert_eq!(fan.degree(4), 4);
        assert_eq!(fan.induced(&[0, 1, 2, 3]), Graph::path(4));
    }

    #[test]
    fn wide_graph_uses_general_path() {
        let g = Graph::path(130);
        let d = g.distance_matrix();
        assert_eq!(d.get(0, 129), 129);
        assert_eq!(d.get(70, 5), 65);
        let p = g.eccentricity_profile().unwrap();
        assert_eq!(p.diameter, 129);
        assert_eq!(p.radius, 65);
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }
}
