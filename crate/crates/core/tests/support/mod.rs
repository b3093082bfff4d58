//! Independent oracles and census generation shared by the integration tests.
//!
//! Everything here is deliberately naive: it works from the definitions with plain loops and
//! its own traversal code so that it can check the library rather than mirror it.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use pathgraph_core::harness::enumerate_labeled;
use pathgraph_core::{maximal_cliques, Graph, VertexSet};
use petgraph::graph::UnGraph;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices (no filtering).
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        graph(n, &e)
    })
}

/// Connected chordal labeled graphs on 1..=max_n vertices.
pub fn labeled_census(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_labeled(n).unwrap()).collect()
}

fn adj(g: &Graph, a: usize, b: usize) -> bool {
    g.neighbors(a).contains(b)
}

/// Breadth-first reachability inside `allowed`, written without the library's traversal.
pub fn reachable(g: &Graph, from: usize, to: usize, allowed: &[bool]) -> bool {
    if !allowed[from] || !allowed[to] {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            return true;
        }
        for y in 0..g.n() {
            if allowed[y] && !seen[y] && adj(g, x, y) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

pub fn is_connected(g: &Graph) -> bool {
    let all = vec![true; g.n()];
    (1..g.n()).all(|v| reachable(g, 0, v, &all))
}

/// Chordless cycle of length >= 4 on some vertex subset, by brute force over subsets.
pub fn has_hole(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).filter(|m| m.count_ones() >= 4).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
        // an induced cycle: connected and 2-regular inside the subset
        let two_regular = vs.iter().all(|&a| vs.iter().filter(|&&b| adj(g, a, b)).count() == 2);
        let allowed: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
        two_regular && vs.iter().all(|&b| reachable(g, vs[0], b, &allowed))
    })
}

/// `a` and `b` joined by a path missing `N[c]`.
pub fn avoids(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let allowed: Vec<bool> = (0..g.n()).map(|x| x != c && !adj(g, x, c)).collect();
    reachable(g, a, b, &allowed)
}

pub fn is_at(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let stable = !adj(g, a, b) && !adj(g, a, c) && !adj(g, b, c);
    stable && avoids(g, a, b, c) && avoids(g, a, c, b) && avoids(g, b, c, a)
}

pub fn brute_ats(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_at(g, a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn brute_quads(g: &Graph) -> Vec<[usize; 4]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if is_at(g, a, b, c) && is_at(g, a, b, d) && is_at(g, a, c, d) && is_at(g, b, c, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// All simple `u`-`v` paths (full vertex sequences), by unpruned depth-first search.
fn simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.clone());
            return;
        }
        for y in 0..g.n() {
            if adj(g, last, y) && !path.contains(&y) {
                path.push(y);
                go(g, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, v, &mut vec![u], &mut out);
    out
}

fn is_chordless(g: &Graph, p: &[usize]) -> bool {
    (0..p.len()).all(|i| (i + 2..p.len()).all(|j| !adj(g, p[i], p[j])))
}

fn sees_exactly(g: &Graph, z: usize, within: &[usize], expected: &[usize]) -> bool {
    within.iter().all(|&w| adj(g, z, w) == expected.contains(&w))
}

fn type1(g: &Graph, zs: &[usize], [l1, l2, r1, r2]: [usize; 4]) -> bool {
    zs.iter().any(|&z| {
        zs.iter().any(|&zp| {
            z != zp
                && !adj(g, z, zp)
                && adj(g, z, l1)
                && adj(g, z, l2)
                && adj(g, z, r1)
                && !adj(g, z, r2)
                && adj(g, zp, r1)
                && adj(g, zp, r2)
                && adj(g, zp, l1)
                && !adj(g, zp, l2)
        })
    })
}

/// Ordered selections of `k` distinct elements of `pool`.
fn arrangements(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        let rest: Vec<usize> = pool.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
        for mut tail in arrangements(&rest, k - 1) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn type2(g: &Graph, zs: &[usize], base: &[usize], [l1, l2, r1, r2]: [usize; 4]) -> bool {
    let mut t = 0;
    while 4 * t + 3 <= zs.len() {
        for mids in arrangements(zs, 2 * t + 1) {
            let mut q = vec![l1, l2, r1, r2];
            q.extend(&mids);
            let clique = q.iter().all(|&a| q.iter().all(|&b| a == b || adj(g, a, b)));
            if !clique || !mids.iter().all(|&z| sees_exactly(g, z, base, &[l1, l2, r1, r2])) {
                continue;
            }
            let rest: Vec<usize> = zs.iter().copied().filter(|z| !mids.contains(z)).collect();
            let within: Vec<usize> = q.iter().chain(base).copied().collect();
            let mut chain = vec![l1];
            chain.extend(&mids);
            chain.push(r1);
            for primes in arrangements(&rest, 2 * t + 2) {
                let stable = primes.iter().all(|&a| primes.iter().all(|&b| a == b || !adj(g, a, b)));
                let pattern =
                    primes.iter().enumerate().all(|(k, &zp)| sees_exactly(g, zp, &within, &[chain[k], chain[k + 1]]));
                if stable && pattern {
                    return true;
                }
            }
        }
        t += 1;
    }
    false
}

/// Strong-path predicate straight from the definition: every ordered pair of disjoint chordless
/// paths, every four-clique on consecutive pairs, all four labelings, and the shared pool `Z`.
pub fn slow_strong_link(g: &Graph, u: usize, v: usize) -> bool {
    assert!(u != v && !adj(g, u, v));
    if (0..g.n()).any(|w| adj(g, u, w) && adj(g, w, v)) {
        return true;
    }
    let paths: Vec<Vec<usize>> =
        simple_paths(g, u, v).into_iter().filter(|p| p.len() >= 4 && is_chordless(g, p)).collect();
    for px in &paths {
        for py in &paths {
            let x = &px[1..px.len() - 1];
            let y = &py[1..py.len() - 1];
            if x.iter().any(|a| y.contains(a)) {
                continue;
            }
            let base: Vec<usize> = x.iter().chain(y).copied().chain([u, v]).collect();
            let zs: Vec<usize> = (0..g.n()).filter(|w| !base.contains(w)).collect();
            let ok = (0..x.len() - 1).all(|i| {
                (0..y.len() - 1).all(|j| {
                    let k = [x[i], x[i + 1], y[j], y[j + 1]];
                    let is_k4 = k.iter().all(|&a| k.iter().all(|&b| a == b || adj(g, a, b)));
                    if !is_k4 {
                        return true;
                    }
                    let labelings = [
                        [x[i], y[j], x[i + 1], y[j + 1]],
                        [x[i], y[j], y[j + 1], x[i + 1]],
                        [y[j], x[i], x[i + 1], y[j + 1]],
                        [y[j], x[i], y[j + 1], x[i + 1]],
                    ];
                    labelings.iter().any(|&lab| type1(g, &zs, lab) || type2(g, &zs, &base, lab))
                })
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Isomorphism-invariant fingerprint used to bucket candidates before exact checks.
fn fingerprint(g: &Graph) -> Vec<usize> {
    let deg = |v: usize| g.neighbors(v).len();
    let mut per_vertex: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut d: Vec<usize> = g.neighbors(v).iter().map(deg).collect();
            d.sort_unstable();
            d.insert(0, deg(v));
            d
        })
        .collect();
    per_vertex.sort();
    let mut out = vec![g.n(), g.edge_count()];
    for d in per_vertex {
        out.push(usize::MAX);
        out.extend(d);
    }
    out
}

type Petgraph = UnGraph<(), ()>;

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.n(), g.edge_count());
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for (a, b) in g.edges() {
        p.add_edge(nodes[a], nodes[b], ());
    }
    p
}

/// Keeps the first member of each isomorphism class, preserving input order.
pub fn dedupe_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<usize>, Vec<(Petgraph, usize)>> = HashMap::new();
    let mut out = Vec::new();
    for g in graphs {
        let p = to_petgraph(&g);
        let bucket = buckets.entry(fingerprint(&g)).or_default();
        if bucket.iter().any(|(q, _)| petgraph::algo::is_isomorphic(q, &p)) {
            continue;
        }
        bucket.push((p, out.len()));
        out.push(g);
    }
    out
}

/// Connected chordal graphs up to isomorphism, for `n = 1..=max_n` (index `n - 1`).
///
/// Every connected chordal graph on `n + 1` vertices has a simplicial vertex whose removal
/// leaves a connected chordal graph, so extending each graph on `n` vertices by a new vertex
/// adjacent to a nonempty clique reaches every class.
pub fn unlabeled_connected_chordal(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![graph(1, &[])]];
    for n in 2..=max_n {
        let mut candidates = Vec::new();
        for g in levels.last().unwrap() {
            let mut seen = HashSet::new();
            let mut cliques: Vec<VertexSet> = Vec::new();
            for q in maximal_cliques(g).unwrap() {
                let bits = q.bits();
                // nonempty subsets of q
                let mut sub = bits;
                while sub != 0 {
                    if seen.insert(sub) {
                        cliques.push(VertexSet::from_bits(sub));
                    }
                    sub = (sub - 1) & bits;
                }
            }
            cliques.sort_by_key(|c| c.bits());
            for c in cliques {
                let mut edges = g.edges();
                edges.extend(c.iter().map(|x| (x, n - 1)));
                candidates.push(graph(n, &edges));
            }
        }
        levels.push(dedupe_isomorphic(candidates));
    }
    levels
}
