mod support;

use std::collections::BTreeMap;

use pathgraph_core::clique_tree::{build_clique_tree, enumerate_clique_trees, separator_multiplicity, CliqueTree};
use pathgraph_core::harness::{generate, FamilySpec};
use pathgraph_core::{maximal_cliques, Graph, VertexSet};
use support::{avoids, graph, labeled_census};

const LIMIT: usize = 1_000_000;

/// Number of clique trees by brute force: every (k-1)-subset of intersecting clique pairs that
/// forms a tree in which each vertex's cliques are connected.
fn brute_tree_count(g: &Graph) -> usize {
    let q = maximal_cliques(g).unwrap();
    let k = q.len();
    let pairs: Vec<(usize, usize)> =
        (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| q[a].intersects(q[b])).collect();
    let connected = |nodes: &[usize], edges: &[(usize, usize)]| {
        let mut seen = vec![nodes[0]];
        let mut grew = true;
        while grew {
            grew = false;
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if seen.contains(&x) && nodes.contains(&y) && !seen.contains(&y) {
                        seen.push(y);
                        grew = true;
                    }
                }
            }
        }
        seen.len() == nodes.len()
    };
    let all: Vec<usize> = (0..k).collect();
    (0u64..1 << pairs.len())
        .filter(|m| m.count_ones() as usize == k - 1)
        .filter(|&m| {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| m >> i & 1 == 1).map(|i| pairs[i]).collect();
            connected(&all, &edges)
                && (0..g.n()).all(|v| {
                    let nodes: Vec<usize> = (0..k).filter(|&i| q[i].contains(v)).collect();
                    connected(&nodes, &edges)
                })
        })
        .count()
}

#[test]
fn enumeration_matches_brute_force() {
    for g in labeled_census(6) {
        let set = enumerate_clique_trees(&g, LIMIT).unwrap();
        assert!(set.complete);
        assert_eq!(set.trees.len(), brute_tree_count(&g), "{g:?}");
    }
}

#[test]
fn enumerated_trees_are_valid_and_include_built_tree() {
    for g in labeled_census(6) {
        let set = enumerate_clique_trees(&g, LIMIT).unwrap();
        assert!(set.trees.iter().all(|t| t.is_valid_for(&g)));
        let built = build_clique_tree(&g).unwrap();
        assert!(set.trees.contains(&built), "{g:?}");
        let mut edges: Vec<_> = set.trees.iter().map(|t| t.edges().to_vec()).collect();
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), set.trees.len(), "duplicate tree for {g:?}");
    }
}

#[test]
fn labels_are_separating_cliques() {
    for g in labeled_census(6) {
        let q = maximal_cliques(&g).unwrap();
        for t in enumerate_clique_trees(&g, LIMIT).unwrap().trees {
            for &l in t.labels() {
                assert!(g.is_clique(l));
                assert!(q.iter().any(|&a| q.iter().any(|&b| a != b && a.intersection(b) == l)));
                let mult = separator_multiplicity(&g, l).unwrap();
                assert_eq!(t.labels().iter().filter(|&&m| m == l).count(), mult);
            }
        }
    }
}

#[test]
fn rooted_implies_directed() {
    for g in labeled_census(6) {
        for t in enumerate_clique_trees(&g, LIMIT).unwrap().trees {
            if !t.is_clique_path_tree() {
                assert!(t.orient_directed().is_err());
                continue;
            }
            let rooted = t.orient_rooted().unwrap();
            let directed = t.orient_directed().unwrap();
            if let Some(r) = rooted {
                assert!(r.is_rooted_path_tree() && r.is_directed_path_tree());
                assert!(directed.is_some());
            }
            if let Some(d) = directed {
                assert!(d.is_directed_path_tree() && d.is_valid_for(&g));
            }
        }
    }
}

fn stable_sets(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_stable(s))
        .map(|s| s.to_vec())
        .collect()
}

#[test]
fn asteroid_subtree_has_at_most_r_leaves() {
    for g in labeled_census(6) {
        let trees = enumerate_clique_trees(&g, LIMIT).unwrap().trees;
        for size in 2..=4 {
            for z in stable_sets(&g, size) {
                for t in &trees {
                    let s = t.asteroid_subtree(&z).unwrap();
                    assert!(s.leaf_count() <= z.len());
                    // minimal and meeting every T^{z_i}
                    assert!(z.iter().all(|&v| t.vertex_subtree(v).unwrap().intersects(s.nodes)));
                    if let Some(leaf_of) = &s.leaf_of {
                        for (i, &leaf) in leaf_of.iter().enumerate() {
                            let hit: Vec<usize> = z.iter().copied().filter(|&v| t.clique(leaf).contains(v)).collect();
                            assert_eq!(hit, vec![z[i]]);
                        }
                    }
                }
            }
        }
    }
}

/// If every `b`-`c` path meets `N[a]`, and `T^a` stays off the tree path between cliques holding
/// `b` and `c`, then `a` is complete to the label of some edge on that tree path.
#[test]
fn separated_vertex_is_complete_to_a_label() {
    for g in labeled_census(6) {
        let trees = enumerate_clique_trees(&g, LIMIT).unwrap().trees;
        let n = g.n();
        for a in 0..n {
            for b in g.vertices().difference(g.closed_neighbors(a)) {
                for c in g.vertices().difference(g.closed_neighbors(a)).difference(g.closed_neighbors(b)) {
                    if avoids(&g, b, c, a) {
                        continue;
                    }
                    for t in &trees {
                        let ta = t.vertex_subtree(a).unwrap();
                        for p in t.vertex_subtree(b).unwrap() {
                            for q in t.vertex_subtree(c).unwrap() {
                                let path = t.path_between(p, q);
                                if path.iter().any(|&x| ta.contains(x)) {
                                    continue;
                                }
                                let complete = path.windows(2).any(|w| {
                                    let e = t.edge_index(w[0], w[1]).unwrap();
                                    t.labels()[e].is_subset(g.neighbors(a))
                                });
                                assert!(complete, "{g:?} a={a} b={b} c={c}");
                            }
                        }
                    }
                }
            }
        }
    }
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

fn sun3() -> Graph {
    generate(&FamilySpec::Sun { k: 3 }).unwrap()
}

#[test]
fn named_trees() {
    let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
    let t = build_clique_tree(&p4).unwrap();
    assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
    assert_eq!(t.labels(), &[set(&[1]), set(&[2])]);
    assert_eq!(enumerate_clique_trees(&p4, LIMIT).unwrap().trees.len(), 1);

    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let t = build_clique_tree(&k4).unwrap();
    assert_eq!((t.node_count(), t.edges().len()), (1, 0));
    assert!(t.orient_directed().unwrap().unwrap().arcs().unwrap().is_empty());

    let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    assert_eq!(enumerate_clique_trees(&claw, LIMIT).unwrap().trees.len(), 3);
    assert_eq!(separator_multiplicity(&claw, set(&[0])).unwrap(), 2);
    assert!(separator_multiplicity(&claw, set(&[1])).is_err());
}

#[test]
fn sun_trees_are_stars() {
    let g = sun3();
    // cliques sorted by vertex list: {0,1,2} {0,1,3} {0,2,5} {1,2,4}
    let q = maximal_cliques(&g).unwrap();
    assert_eq!(q[0], set(&[0, 1, 2]));
    let trees = enumerate_clique_trees(&g, LIMIT).unwrap().trees;
    assert_eq!(trees.len(), 1);
    for t in &trees {
        assert_eq!(t.neighbors(0).len(), 3);
        assert!(t.is_clique_path_tree());
        assert_eq!(t.orient_directed().unwrap(), None);
        assert_eq!(t.orient_rooted().unwrap(), None);
        assert_eq!(t.vertex_subtree(0).unwrap(), set(&[0, 1, 2]));
        assert_eq!(t.reduced_subtree(set(&[1, 2, 3])), set(&[0, 1, 2, 3]));
        let s = t.asteroid_subtree(&[3, 4, 5]).unwrap();
        assert_eq!((s.nodes, s.leaf_count()), (set(&[0, 1, 2, 3]), 3));
    }
    assert_eq!(build_clique_tree(&g).unwrap(), trees[0]);
    assert_eq!(separator_multiplicity(&g, set(&[0, 1])).unwrap(), 1);
}

#[test]
fn spider_trees() {
    let g = generate(&FamilySpec::Spider { legs: 3 }).unwrap();
    for t in enumerate_clique_trees(&g, LIMIT).unwrap().trees {
        let roots = t.rooted_orientations().unwrap();
        if t.is_clique_path() {
            unreachable!("the 3-leg spider is not an interval graph");
        }
        // path-shaped center cliques admit a root
        let center: Vec<usize> = (0..t.node_count()).filter(|&x| t.clique(x).contains(0)).collect();
        let center_edges = t.edges().iter().filter(|(a, b)| center.contains(a) && center.contains(b)).count();
        assert_eq!(center_edges, 2);
        assert!(!roots.is_empty());
    }
    let g4 = generate(&FamilySpec::Spider { legs: 4 }).unwrap();
    let leaves = [2, 4, 6, 8];
    for t in enumerate_clique_trees(&g4, LIMIT).unwrap().trees {
        assert_eq!(t.asteroid_subtree(&leaves).unwrap().leaf_count(), 4);
    }
}

#[test]
fn label_multisets_agree_small() {
    for g in labeled_census(6) {
        let trees = enumerate_clique_trees(&g, LIMIT).unwrap().trees;
        let reference: Vec<VertexSet> = trees[0].label_multiset();
        assert!(trees.iter().all(|t| t.label_multiset() == reference));
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for l in &reference {
            *counts.entry(l.bits()).or_default() += 1;
        }
        for (bits, c) in counts {
            assert_eq!(separator_multiplicity(&g, VertexSet::from_bits(bits)).unwrap(), c);
        }
    }
}

#[test]
fn tree_serializes_with_labels() {
    let t: CliqueTree = build_clique_tree(&graph(3, &[(0, 1), (1, 2)])).unwrap();
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(json["cliques"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(json["edges"][0]["label"], serde_json::json!([1]));
    assert_eq!(json["root"], serde_json::Value::Null);
}
