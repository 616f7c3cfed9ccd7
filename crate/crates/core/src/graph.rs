//! Immutable simple undirected graphs over dense 0-based vertex indices.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph: a vertex count `n` and one adjacency bit row
/// per vertex.
///
/// Construction validates the simple-graph invariants (symmetry is built in,
/// self-loops and duplicate edges are rejected, every index must be `< n`).
/// Values are immutable after construction and safe to share across workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                order: n,
                max: MAX_VERTICES,
            });
        }
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Iterator over all vertex indices.
    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// The open neighborhood of `v` as a bit row. Never contains `v` itself.
    ///
    /// Panics if `v >= order()`, like slice indexing.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Iterates edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Empty set sized for this graph.
    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Full vertex set of this graph.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices reachable from `start` while staying inside `within`
    /// (`start` must be a member of `within`).
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        loop {
            let mut next = self.empty_set();
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    /// True iff the graph has exactly one connected component.
    /// The empty graph is not connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.reach(0, &self.full_set()).len() == self.n
    }

    /// True iff the subgraph induced by `s` is connected. The empty set does
    /// not induce a connected subgraph; a singleton does.
    pub fn induced_connected(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(start) => self.reach(start, s).len() == s.len(),
        }
    }

    /// `s` together with every neighbor of a member of `s`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// True iff every vertex is in `s` or adjacent to a member of `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.closed_neighborhood(s).len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
