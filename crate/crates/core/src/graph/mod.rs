//! Simple undirected graphs over dense vertex indices.

mod chordal;
mod format;

use std::fmt;

pub use chordal::{chordality, maximal_cliques, ChordalityWitness};
pub use format::{parse_edge_list, parse_graph6, read_graphs, write_edge_list, write_graph6, GraphInput};

use crate::bitset::{BitSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

pub type VertexSet = BitSet;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and loop-free; both are enforced at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::UnsupportedSize { n, max: MAX_ELEMENTS });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor sets that are already symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_ELEMENTS);
        debug_assert!(adj.iter().enumerate().all(|(u, nu)| !nu.contains(u)
            && nu.iter().all(|v| v < adj.len() && adj[v].contains(u))));
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `u` sees `v`.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Vertices of `within` adjacent to every vertex of `set`.
    pub fn common_neighbors(&self, set: VertexSet, within: VertexSet) -> VertexSet {
        set.iter().fold(within.difference(set), |acc, v| acc.intersection(self.adj[v]))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Vertices reachable from `start` using only vertices of `allowed`.
    pub fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        if !allowed.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Connected components of the subgraph induced on `allowed`, ordered by smallest vertex.
    pub fn components_within(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let mut rest = allowed.intersection(self.vertices());
        let mut parts = Vec::new();
        while let Some(v) = rest.first() {
            let part = self.reach(v, rest);
            rest = rest.difference(part);
            parts.push(part);
        }
        parts
    }

    /// Connected components of `G \ removed`.
    pub fn components_after_removal(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices().difference(removed))
    }

    /// A shortest `u`-`v` path whose vertices all lie in `allowed`.
    pub fn shortest_path(&self, u: usize, v: usize, allowed: VertexSet) -> Option<Vec<usize>> {
        if !allowed.contains(u) || !allowed.contains(v) {
            return None;
        }
        let mut parent = [usize::MAX; MAX_ELEMENTS];
        let mut seen = VertexSet::singleton(u);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                let mut path = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.adj[x].intersection(allowed).difference(seen) {
                seen.insert(y);
                parent[y] = x;
                queue.push_back(y);
            }
        }
        None
    }

    /// Subgraph induced on `keep`, relabeled to `0..|keep|` in increasing order.
    /// Returns the subgraph and the map from new to old indices.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut index = [usize::MAX; MAX_ELEMENTS];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|w| index[w]).collect())
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    /// True if `path` is a walk along edges with no repeated vertex and no chord.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        let mut seen = VertexSet::EMPTY;
        for (i, &v) in path.iter().enumerate() {
            if v >= self.n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
            for (j, &w) in path[..i].iter().enumerate() {
                if self.adjacent(v, w) != (j + 1 == i) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
