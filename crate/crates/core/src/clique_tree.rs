//! Clique trees of connected chordal graphs.
//!
//! Nodes of a [`CliqueTree`] are the maximal cliques of the graph, indexed in the order
//! returned by [`maximal_cliques`]. Each tree edge carries the label `Q ∩ Q'`. A tree may
//! additionally carry an orientation (one direction per edge) and a root.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph, VertexSet};

pub type NodeSet = BitSet;

/// Default cap on the number of clique trees an enumeration may produce.
pub const DEFAULT_TREE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    cliques: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    labels: Vec<VertexSet>,
    /// `forward[e]` means edge `(a, b)` is directed `a -> b`.
    forward: Option<Vec<bool>>,
    root: Option<usize>,
    adj: Vec<NodeSet>,
}

impl Serialize for CliqueTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;

        #[derive(Serialize)]
        struct Edge {
            from: usize,
            to: usize,
            label: VertexSet,
        }

        let edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let (from, to) = match &self.forward {
                    Some(f) if !f[e] => (b, a),
                    _ => (a, b),
                };
                Edge { from, to, label: self.labels[e] }
            })
            .collect();
        let mut st = serializer.serialize_struct("CliqueTree", 4)?;
        st.serialize_field("cliques", &self.cliques)?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("oriented", &self.forward.is_some())?;
        st.serialize_field("root", &self.root)?;
        st.end()
    }
}

/// A minimal separator together with the number of clique-tree edges it labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub vertices: VertexSet,
    pub multiplicity: usize,
}

/// Minimum subtree meeting every `T^{z_i}` for a stable set `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsteroidSubtree {
    pub nodes: NodeSet,
    pub leaves: Vec<usize>,
    /// When there are exactly `|z|` leaves: `leaf_of[i]` is the leaf containing `z[i]`.
    pub leaf_of: Option<Vec<usize>>,
}

impl AsteroidSubtree {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }
}

impl CliqueTree {
    /// Assembles and validates a clique tree of `g` from node cliques and tree edges.
    pub fn new(g: &Graph, cliques: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let t = Self::assemble(cliques, edges);
        if !t.is_valid_for(g) {
            return Err(Error::domain("not a clique tree of the graph"));
        }
        Ok(t)
    }

    fn assemble(cliques: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        let labels = edges.iter().map(|&(a, b)| cliques[a].intersection(cliques[b])).collect();
        let mut adj = vec![NodeSet::EMPTY; cliques.len()];
        for &(a, b) in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        CliqueTree { cliques, edges, labels, forward: None, root: None, adj }
    }

    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.cliques.len())
    }

    pub fn clique(&self, node: usize) -> VertexSet {
        self.cliques[node]
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[VertexSet] {
        &self.labels
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        self.adj[node]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn is_oriented(&self) -> bool {
        self.forward.is_some()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Directed arcs `(from, to)`, one per edge, when the tree is oriented.
    pub fn arcs(&self) -> Option<Vec<(usize, usize)>> {
        let fwd = self.forward.as_ref()?;
        Some(self.edges.iter().zip(fwd).map(|(&(a, b), &f)| if f { (a, b) } else { (b, a) }).collect())
    }

    /// Whether the tree edge between adjacent nodes `from` and `to` is directed `from -> to`.
    pub fn points(&self, from: usize, to: usize) -> Option<bool> {
        let e = self.edge_index(from, to)?;
        let f = self.forward.as_ref()?[e];
        Some(f == (from < to))
    }

    /// Copy of this tree carrying the given per-edge orientation and root.
    pub fn with_orientation(&self, forward: Vec<bool>, root: Option<usize>) -> CliqueTree {
        assert_eq!(forward.len(), self.edges.len());
        CliqueTree { forward: Some(forward), root, ..self.clone() }
    }

    /// Copy without orientation or root.
    pub fn unoriented(&self) -> CliqueTree {
        CliqueTree { forward: None, root: None, ..self.clone() }
    }

    /// Multiset of edge labels, sorted.
    pub fn label_multiset(&self) -> Vec<VertexSet> {
        let mut l = self.labels.clone();
        l.sort_by_key(|s| s.to_vec());
        l
    }

    fn is_tree(&self) -> bool {
        let k = self.cliques.len();
        if k == 0 || self.edges.len() != k - 1 {
            return false;
        }
        self.connected_within(self.nodes())
    }

    fn connected_within(&self, set: NodeSet) -> bool {
        let Some(start) = set.first() else { return true };
        let mut seen = NodeSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = NodeSet::EMPTY;
            for x in frontier {
                next = next.union(self.adj[x]);
            }
            frontier = next.intersection(set).difference(seen);
            seen = seen.union(frontier);
        }
        seen == set
    }

    /// Every `T^v` is connected.
    pub fn has_clique_tree_property(&self) -> bool {
        let all = self.cliques.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c));
        all.iter().all(|v| self.connected_within(self.subtree_of(v)))
    }

    /// Full check against `g`: nodes are exactly `Q(g)`, edges form a tree with the
    /// clique-tree property, labels are intersections, and any root/orientation is consistent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let Ok(q) = maximal_cliques(g) else { return false };
        let mut mine = self.cliques.clone();
        mine.sort_by_key(|c| c.to_vec());
        if mine != q || !self.is_tree() || !self.has_clique_tree_property() {
            return false;
        }
        if self.edges.iter().zip(&self.labels).any(|(&(a, b), &l)| l != self.cliques[a].intersection(self.cliques[b])) {
            return false;
        }
        match (self.root, &self.forward) {
            (Some(_), None) => false,
            (Some(r), Some(_)) => self.is_oriented_away_from(r),
            _ => true,
        }
    }

    fn subtree_of(&self, v: usize) -> NodeSet {
        self.cliques.iter().enumerate().filter(|(_, c)| c.contains(v)).map(|(i, _)| i).collect()
    }

    /// `T^v`: the nodes whose clique contains `v`.
    pub fn vertex_subtree(&self, v: usize) -> Result<NodeSet> {
        let s = self.subtree_of(v);
        if s.is_empty() {
            return Err(Error::domain(format!("vertex {v} occurs in no node")));
        }
        Ok(s)
    }

    /// Nodes on the tree path from `a` to `b`, in order.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let k = self.cliques.len();
        let mut parent = vec![usize::MAX; k];
        let mut stack = vec![a];
        parent[a] = a;
        while let Some(x) = stack.pop() {
            if x == b {
                break;
            }
            for y in self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// `T[X]`: the smallest subtree containing every node of `x` (Steiner closure).
    pub fn reduced_subtree(&self, x: NodeSet) -> NodeSet {
        let mut s = self.nodes();
        if x.is_empty() {
            return NodeSet::EMPTY;
        }
        loop {
            let prunable = s.difference(x).iter().find(|&y| self.adj[y].intersection(s).len() <= 1);
            match prunable {
                Some(y) => s.remove(y),
                None => return s,
            }
        }
    }

    /// Nodes of `set` with at most one neighbor inside `set`.
    pub fn leaves_within(&self, set: NodeSet) -> Vec<usize> {
        set.iter().filter(|&x| self.adj[x].intersection(set).len() <= 1).collect()
    }

    /// `T(z_1, ..., z_r)`: the minimum subtree meeting every `T^{z_i}`.
    ///
    /// The `T^{z_i}` are pairwise disjoint subtrees, so the minimum is unique; it is found by
    /// repeatedly pruning a leaf that is not the last remaining node of some `T^{z_i}`.
    pub fn asteroid_subtree(&self, z: &[usize]) -> Result<AsteroidSubtree> {
        if z.len() < 2 {
            return Err(Error::domain("asteroid subtree needs at least two vertices"));
        }
        let subtrees = z.iter().map(|&v| self.vertex_subtree(v)).collect::<Result<Vec<_>>>()?;
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                if subtrees[i].intersects(subtrees[j]) {
                    return Err(Error::domain(format!("vertices {} and {} are adjacent", z[i], z[j])));
                }
            }
        }
        let mut s = self.nodes();
        loop {
            let prunable = s.iter().find(|&y| {
                self.adj[y].intersection(s).len() <= 1
                    && subtrees.iter().all(|&st| !st.contains(y) || st.intersection(s).len() > 1)
            });
            match prunable {
                Some(y) if s.len() > 1 => s.remove(y),
                _ => break,
            }
        }
        let leaves = self.leaves_within(s);
        let leaf_of = (leaves.len() == z.len()).then(|| {
            subtrees
                .iter()
                .map(|st| leaves.iter().copied().find(|&l| st.contains(l)).expect("every leaf meets some T^z"))
                .collect()
        });
        Ok(AsteroidSubtree { nodes: s, leaves, leaf_of })
    }

    /// The tree itself is a path (a clique path).
    pub fn is_clique_path(&self) -> bool {
        self.adj.iter().all(|a| a.len() <= 2)
    }

    /// Every `T^v` is a path.
    pub fn is_clique_path_tree(&self) -> bool {
        (0..self.cliques.len()).all(|x| {
            // at a node, two incident edges sharing a vertex already put it on both;
            // three such edges pairwise sharing the same vertex give a branching T^v
            let incident: Vec<VertexSet> =
                self.adj[x].iter().map(|y| self.cliques[x].intersection(self.cliques[y])).collect();
            self.cliques[x].iter().all(|v| incident.iter().filter(|l| l.contains(v)).count() <= 2)
        })
    }

    fn require_path_tree(&self) -> Result<()> {
        if self.is_clique_path_tree() {
            Ok(())
        } else {
            Err(Error::domain("clique tree is not a clique path tree"))
        }
    }

    /// Pairs of edges meeting at a node whose labels intersect; such pairs must be oriented
    /// through the shared node. Returned as `(e1, e2, parity)` with
    /// `forward[e1] ^ forward[e2] == parity` required.
    fn orientation_constraints(&self) -> Vec<(usize, usize, bool)> {
        let mut out = Vec::new();
        for x in 0..self.cliques.len() {
            let inc: Vec<usize> = self.adj[x].iter().map(|y| self.edge_index(x, y).unwrap()).collect();
            for (i, &e1) in inc.iter().enumerate() {
                for &e2 in &inc[i + 1..] {
                    if self.labels[e1].intersects(self.labels[e2]) {
                        // forward[e] enters x iff x is the larger endpoint
                        let enters1 = self.edges[e1].1 == x;
                        let enters2 = self.edges[e2].1 == x;
                        // need in(e1) != in(e2): (f1 == enters1) != (f2 == enters2)
                        out.push((e1, e2, enters1 == enters2));
                    }
                }
            }
        }
        out
    }

    /// Every directed orientation under which each `T^v` is a directed path, in a fixed order
    /// (at most `limit` of them).
    pub fn directed_orientations(&self, limit: usize) -> Result<Vec<CliqueTree>> {
        self.require_path_tree()?;
        let m = self.edges.len();
        let cons = self.orientation_constraints();
        let mut by_edge: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m];
        for &(a, b, p) in &cons {
            by_edge[a].push((b, p));
            by_edge[b].push((a, p));
        }
        let mut out = Vec::new();
        let mut assign: Vec<Option<bool>> = vec![None; m];
        self.orient_dfs(&by_edge, &mut assign, limit, &mut out);
        Ok(out)
    }

    fn orient_dfs(
        &self,
        by_edge: &[Vec<(usize, bool)>],
        assign: &mut Vec<Option<bool>>,
        limit: usize,
        out: &mut Vec<CliqueTree>,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(e) = assign.iter().position(Option::is_none) else {
            out.push(self.with_orientation(assign.iter().map(|f| f.unwrap()).collect(), None));
            return;
        };
        for choice in [true, false] {
            let saved = assign.clone();
            if propagate(by_edge, assign, e, choice) {
                self.orient_dfs(by_edge, assign, limit, out);
            }
            *assign = saved;
        }
    }

    /// An orientation making this a clique directed path tree, or `None` if none exists.
    pub fn orient_directed(&self) -> Result<Option<CliqueTree>> {
        Ok(self.directed_orientations(1)?.into_iter().next())
    }

    fn is_oriented_away_from(&self, root: usize) -> bool {
        let Some(fwd) = &self.forward else { return false };
        let mut seen = NodeSet::singleton(root);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in self.adj[x].difference(seen) {
                let e = self.edge_index(x, y).unwrap();
                if fwd[e] != (x < y) {
                    return false;
                }
                seen.insert(y);
                stack.push(y);
            }
        }
        true
    }

    fn orientation_away_from(&self, root: usize) -> Vec<bool> {
        let mut fwd = vec![true; self.edges.len()];
        let mut seen = NodeSet::singleton(root);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in self.adj[x].difference(seen) {
                fwd[self.edge_index(x, y).unwrap()] = x < y;
                seen.insert(y);
                stack.push(y);
            }
        }
        fwd
    }

    /// The smallest-index root such that orienting every edge away from it makes each `T^v`
    /// a directed path, returned as the rooted tree.
    pub fn orient_rooted(&self) -> Result<Option<CliqueTree>> {
        Ok(self.rooted_orientations()?.into_iter().next())
    }

    /// Every valid root, as rooted trees, in increasing root order.
    pub fn rooted_orientations(&self) -> Result<Vec<CliqueTree>> {
        self.require_path_tree()?;
        let mut out = Vec::new();
        for r in 0..self.cliques.len() {
            let fwd = self.orientation_away_from(r);
            let t = self.with_orientation(fwd, Some(r));
            if t.is_directed_path_tree() {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Oriented, and every `T^v` is a directed path.
    pub fn is_directed_path_tree(&self) -> bool {
        let Some(fwd) = &self.forward else { return false };
        self.is_clique_path_tree()
            && self.orientation_constraints().iter().all(|&(a, b, p)| (fwd[a] ^ fwd[b]) == p)
    }

    /// Rooted, oriented away from the root, and a clique directed path tree.
    pub fn is_rooted_path_tree(&self) -> bool {
        matches!(self.root, Some(r) if self.is_oriented_away_from(r)) && self.is_directed_path_tree()
    }

    /// Whether the tree path between two nodes is a directed path (in either direction).
    pub fn is_directed_path_between(&self, a: usize, b: usize) -> Option<bool> {
        self.forward.as_ref()?;
        let path = self.path_between(a, b);
        let dirs: Vec<bool> = path.windows(2).map(|w| self.points(w[0], w[1]).unwrap()).collect();
        Some(dirs.iter().all(|&d| d) || dirs.iter().all(|&d| !d))
    }
}

fn propagate(by_edge: &[Vec<(usize, bool)>], assign: &mut [Option<bool>], e: usize, value: bool) -> bool {
    let mut stack = vec![(e, value)];
    while let Some((x, val)) = stack.pop() {
        match assign[x] {
            Some(cur) if cur != val => return false,
            Some(_) => continue,
            None => assign[x] = Some(val),
        }
        for &(y, parity) in &by_edge[x] {
            stack.push((y, val ^ parity));
        }
    }
    true
}

fn require_connected_chordal(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph has no clique tree"));
    }
    let cliques = maximal_cliques(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(cliques)
}

/// Builds one clique tree: a maximum-weight spanning tree of the clique intersection graph
/// (Kruskal, ties broken by the lexicographically smallest clique pair), checked before return.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let cliques = require_connected_chordal(g)?;
    let k = cliques.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let w = cliques[a].intersection(cliques[b]).len();
            if w > 0 {
                pairs.push((w, a, b));
            }
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut comp: Vec<usize> = (0..k).collect();
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for (_, a, b) in pairs {
        let (ca, cb) = (comp[a], comp[b]);
        if ca != cb {
            for c in comp.iter_mut() {
                if *c == cb {
                    *c = ca;
                }
            }
            edges.push((a, b));
        }
    }
    let t = CliqueTree::assemble(cliques, edges);
    if !(t.is_tree() && t.has_clique_tree_property()) {
        return Err(Error::domain("internal: spanning tree failed the clique-tree property"));
    }
    Ok(t)
}

/// Outcome of a clique-tree enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Visit {
    /// Every clique tree was visited.
    Complete,
    /// The visitor asked to stop.
    Stopped,
    /// More than `limit` clique trees exist; only `limit` were visited.
    BudgetExceeded,
}

/// Visits every clique tree of a connected chordal graph exactly once.
///
/// Trees are the spanning trees of the graph on `Q(G)` joining cliques with nonempty
/// intersection that satisfy the clique-tree property. Candidate edges are taken in
/// lexicographic order with include-before-exclude branching; a partial forest is abandoned
/// as soon as one of its paths breaks some `T^v`, or the remaining candidates cannot span.
pub fn visit_clique_trees<F>(g: &Graph, limit: usize, mut visit: F) -> Result<Visit>
where
    F: FnMut(CliqueTree) -> ControlFlow<()>,
{
    let cliques = require_connected_chordal(g)?;
    let k = cliques.len();
    let mut candidates = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if cliques[a].intersects(cliques[b]) {
                candidates.push((a, b));
            }
        }
    }
    let mut search = TreeSearch {
        cliques: &cliques,
        candidates: &candidates,
        adj: vec![NodeSet::EMPTY; k],
        chosen: Vec::with_capacity(k),
        excluded: vec![false; candidates.len()],
        yielded: 0,
        limit,
    };
    let flow = search.run(0, &mut visit);
    Ok(match flow {
        ControlFlow::Continue(()) => Visit::Complete,
        ControlFlow::Break(Halt::Visitor) => Visit::Stopped,
        ControlFlow::Break(Halt::Budget) => Visit::BudgetExceeded,
    })
}

enum Halt {
    Visitor,
    Budget,
}

struct TreeSearch<'a> {
    cliques: &'a [VertexSet],
    candidates: &'a [(usize, usize)],
    adj: Vec<NodeSet>,
    chosen: Vec<(usize, usize)>,
    excluded: Vec<bool>,
    yielded: usize,
    limit: usize,
}

impl TreeSearch<'_> {
    fn component(&self, start: usize) -> NodeSet {
        let mut seen = NodeSet::singleton(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in self.adj[x].difference(seen) {
                seen.insert(y);
                stack.push(y);
            }
        }
        seen
    }

    /// For each node `p` in the component of `from`: the intersection of all cliques on the
    /// forest path from `p` to `from`.
    fn path_meets(&self, from: usize) -> Vec<(usize, VertexSet)> {
        let mut out = vec![(from, self.cliques[from])];
        let mut seen = NodeSet::singleton(from);
        let mut i = 0;
        while i < out.len() {
            let (x, meet) = out[i];
            for y in self.adj[x].difference(seen) {
                seen.insert(y);
                out.push((y, meet.intersection(self.cliques[y])));
            }
            i += 1;
        }
        out
    }

    fn joinable(&self, a: usize, b: usize) -> bool {
        if self.component(a).contains(b) {
            return false;
        }
        let ma = self.path_meets(a);
        let mb = self.path_meets(b);
        ma.iter().all(|&(p, meet_p)| {
            mb.iter().all(|&(q, meet_q)| {
                self.cliques[p].intersection(self.cliques[q]).is_subset(meet_p.intersection(meet_q))
            })
        })
    }

    fn can_still_span(&self, from: usize) -> bool {
        let k = self.cliques.len();
        let mut adj = self.adj.clone();
        for (i, &(a, b)) in self.candidates.iter().enumerate().skip(from) {
            if !self.excluded[i] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut seen = NodeSet::singleton(0);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for y in adj[x].difference(seen) {
                seen.insert(y);
                stack.push(y);
            }
        }
        seen.len() == k
    }

    fn run<F>(&mut self, idx: usize, visit: &mut F) -> ControlFlow<Halt>
    where
        F: FnMut(CliqueTree) -> ControlFlow<()>,
    {
        if self.chosen.len() + 1 == self.cliques.len() {
            if self.yielded == self.limit {
                return ControlFlow::Break(Halt::Budget);
            }
            self.yielded += 1;
            let t = CliqueTree::assemble(self.cliques.to_vec(), self.chosen.clone());
            debug_assert!(t.is_tree() && t.has_clique_tree_property());
            return match visit(t) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Halt::Visitor),
            };
        }
        if idx == self.candidates.len() {
            return ControlFlow::Continue(());
        }
        let (a, b) = self.candidates[idx];
        if self.joinable(a, b) {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
            self.chosen.push((a, b));
            let r = self.run(idx + 1, visit);
            self.chosen.pop();
            self.adj[a].remove(b);
            self.adj[b].remove(a);
            r?;
        }
        self.excluded[idx] = true;
        let r = if self.can_still_span(idx + 1) { self.run(idx + 1, visit) } else { ControlFlow::Continue(()) };
        self.excluded[idx] = false;
        r
    }
}

/// Result of [`enumerate_clique_trees`]: the trees found and whether the list is complete.
#[derive(Clone, Debug)]
pub struct CliqueTreeSet {
    pub trees: Vec<CliqueTree>,
    /// False when the tree limit was hit; `trees` then holds exactly `limit` trees.
    pub complete: bool,
}

/// Collects all clique trees of a connected chordal graph, up to `limit`.
pub fn enumerate_clique_trees(g: &Graph, limit: usize) -> Result<CliqueTreeSet> {
    let mut trees = Vec::new();
    let visit = visit_clique_trees(g, limit, |t| {
        trees.push(t);
        ControlFlow::Continue(())
    })?;
    Ok(CliqueTreeSet { trees, complete: visit == Visit::Complete })
}

/// `c - 1`, where `c` counts the components of `G \ s` containing a vertex complete to `s`.
pub fn separator_multiplicity(g: &Graph, s: VertexSet) -> Result<usize> {
    if !s.is_subset(g.vertices()) || s.is_empty() {
        return Err(Error::domain(format!("{s:?} is not a separator")));
    }
    let complete = g.common_neighbors(s, g.vertices());
    let c = g.components_after_removal(s).iter().filter(|part| part.intersects(complete)).count();
    if c < 2 {
        return Err(Error::domain(format!("{s:?} is not a separator")));
    }
    Ok(c - 1)
}

/// The distinct separators of a connected chordal graph (edge labels of any clique tree) with
/// their multiplicities.
pub fn separators(g: &Graph) -> Result<Vec<Separator>> {
    let t = build_clique_tree(g)?;
    let mut labels = t.label_multiset();
    labels.dedup();
    labels
        .into_iter()
        .map(|s| Ok(Separator { vertices: s, multiplicity: separator_multiplicity(g, s)? }))
        .collect()
}
