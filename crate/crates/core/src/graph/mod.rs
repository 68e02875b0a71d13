//! Simple undirected graphs on at most 64 dense vertex labels.
//!
//! Adjacency is stored as one `u64` row per vertex, so neighbourhood
//! intersections, degree queries and visited sets are single-word bit
//! operations. Everything above this module inherits the dense labelling
//! `0..n`.

mod canon;
mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm, CANON_MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// An unordered vertex pair, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Immutable simple graph value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn mask_upto(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                n,
                max: MAX_ORDER,
                what: "graphs",
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range labels.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let e = e.into();
            g.check_vertex(e.v)?;
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if g.has_edge(e.u, e.v) {
                return Err(Error::DuplicateEdge(e));
            }
            g.insert_edge(e.u, e.v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| iter_bits(self.adj[u] & !mask_upto(u + 1)).map(move |v| Edge { u, v }))
    }

    /// Vertices reachable from `start` (inclusive) as a mask, restricted to `allowed`.
    pub(crate) fn reach_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = bit(start) & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff the graph has exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = mask_upto(self.n);
        self.reach_within(0, all) == all
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all = mask_upto(self.n);
        let mut left = all;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach_within(start, all);
            left &= !comp;
            out.push(iter_bits(comp).collect());
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled so `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if pos[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let mut g = Graph::empty(vertices.len())?;
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX {
                    g.adj[i] |= bit(pos[w]);
                }
            }
        }
        Ok(g)
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != mask_upto(self.n) {
            return Err(Error::InvalidArgument("relabelling is not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for e in self.edges() {
            g.insert_edge(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::EdgeAbsent(e));
        }
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        Ok(g)
    }

    /// Copy of the graph with vertices in `removed` (a mask) deleted, relabelled
    /// in increasing order of the surviving vertices.
    pub(crate) fn without_vertices(&self, removed: u64) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| removed & bit(v) == 0).collect();
        self.induced(&keep).expect("kept vertices are distinct and in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn connectivity() {
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert!(bowtie.is_connected());
    }

    #[test]
    fn edges_are_sorted_and_counted() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![Edge::new(0, 1), Edge::new(0, 3), Edge::new(1, 2)]);
        assert_eq!(g.size(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn induced_and_relabel() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = path.induced(&[2, 1, 0]).unwrap();
        assert_eq!(sub, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        let flipped = path.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(flipped, path);
        assert!(path.relabel(&[0, 0, 1, 2]).is_err());
    }
}
