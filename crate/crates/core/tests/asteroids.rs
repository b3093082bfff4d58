mod support;

use pathgraph_core::asteroid::{
    asteroidal_quadruple_members, asteroidal_triple_members, find_asteroidal_quadruples, find_asteroidal_triples,
    find_parallel_asteroidal_quadruples, find_strong_asteroidal_triples, find_strong_path,
    find_weak_asteroidal_quadruples, find_weak_asteroidal_triples, verify_strong_path_witness,
};
use pathgraph_core::harness::{generate, FamilySpec};
use pathgraph_core::{read_graphs, Attachment, AttachmentRecord, Budget, Decision, Graph, Search, StrongLink};
use proptest::prelude::*;
use support::{brute_ats, brute_quads, graph, labeled_census, slow_strong_link};

fn census() -> Vec<Graph> {
    let mut gs = labeled_census(6);
    let text = include_str!("data/connected_chordal_8.g6");
    gs.extend(read_graphs(text).unwrap().into_iter().map(|gi| gi.graph));
    gs
}

fn budget() -> Budget {
    Budget::unlimited_time()
}

#[test]
fn asteroids_match_brute_force() {
    for g in census() {
        assert_eq!(asteroidal_triple_members(&g), brute_ats(&g), "{g:?}");
        assert_eq!(asteroidal_quadruple_members(&g), brute_quads(&g), "{g:?}");
    }
}

#[test]
fn asteroid_witnesses_verify() {
    for g in labeled_census(6) {
        assert!(find_asteroidal_triples(&g).iter().all(|w| w.verify(&g)));
        assert!(find_asteroidal_quadruples(&g).iter().all(|w| w.verify(&g)));
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) {
    let found = find_strong_path(g, u, v, &budget()).unwrap();
    let expected = slow_strong_link(g, u, v);
    match found {
        Search::Found(w) => {
            assert!(expected, "finder linked {u},{v} in {g:?}");
            assert!(verify_strong_path_witness(g, &w), "{w:?}");
        }
        Search::Absent => assert!(!expected, "finder missed {u},{v} in {g:?}"),
        Search::Unknown(r) => panic!("unexpected budget trip: {r}"),
    }
}

#[test]
fn strong_paths_match_slow_oracle() {
    for g in census() {
        for u in 0..g.n() {
            for v in g.vertices().difference(g.closed_neighbors(u)).iter().filter(|&v| v > u) {
                check_pair(&g, u, v);
            }
        }
    }
}

/// Four-clique `0..4` (`x_i, y_j, x_{i+1}, y_{j+1}`), `u = 4 + k` sees `0, 1`, `v` sees `2, 3`,
/// clique extension `z_1..z_{2t+1}` and stable chain `z'_1..z'_{2t+2}` as in a type-2 attachment.
fn type2_template(t: usize) -> (Graph, usize, usize) {
    let zs: Vec<usize> = (4..4 + 2 * t + 1).collect();
    let zps: Vec<usize> = (zs[zs.len() - 1] + 1..zs[zs.len() - 1] + 1 + 2 * t + 2).collect();
    let u = zps[zps.len() - 1] + 1;
    let v = u + 1;
    let q: Vec<usize> = (0..4).chain(zs.iter().copied()).collect();
    let mut e = Vec::new();
    for (i, &a) in q.iter().enumerate() {
        for &b in &q[i + 1..] {
            e.push((a, b));
        }
    }
    let mut chain = vec![0];
    chain.extend(&zs);
    chain.push(2);
    for (k, &zp) in zps.iter().enumerate() {
        e.push((zp, chain[k]));
        e.push((zp, chain[k + 1]));
    }
    e.extend([(u, 0), (u, 1), (v, 2), (v, 3)]);
    (graph(v + 1, &e), u, v)
}

#[test]
fn type2_templates_link() {
    for t in 0..=1 {
        let (g, u, v) = type2_template(t);
        assert!(slow_strong_link(&g, u, v));
        check_pair(&g, u, v);
        let Search::Found(w) = find_strong_path(&g, u, v, &budget()).unwrap() else { panic!() };
        let StrongLink::Paths { attachments, .. } = &w.link else { panic!("{w:?}") };
        assert!(matches!(attachments[..], [AttachmentRecord { attachment: Attachment::Type2 { t: found, .. }, .. }] if found == t));
        // removing the last chain vertex breaks the attachment and the link
        let last = u - 1;
        let cut: Vec<_> = g.edges().into_iter().filter(|&(a, b)| a != last && b != last).collect();
        let h = graph(g.n(), &cut);
        assert!(!slow_strong_link(&h, u, v));
        check_pair(&h, u, v);
    }
}

fn flipped(g: &Graph, flips: &[(usize, usize)]) -> Graph {
    let mut edges = g.edges();
    for &(a, b) in flips {
        let (a, b) = (a % g.n(), b % g.n());
        if a == b {
            continue;
        }
        let e = (a.min(b), a.max(b));
        match edges.iter().position(|&x| x == e) {
            Some(i) => {
                edges.remove(i);
            }
            None => edges.push(e),
        }
    }
    graph(g.n(), &edges)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn perturbed_type2_agrees_with_oracle(t in 0usize..=1, flips in proptest::collection::vec((0usize..16, 0usize..16), 0..4)) {
        let (base, u, v) = type2_template(t);
        let g = flipped(&base, &flips);
        if !g.adjacent(u, v) {
            check_pair(&g, u, v);
        }
    }

    #[test]
    fn random_small_graphs_agree_with_oracle(n in 4usize..=8, bits in any::<u32>(), more in any::<u32>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mask = u64::from(bits) | (u64::from(more) << 32);
        let e: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        let g = graph(n, &e);
        for u in 0..n {
            for v in g.vertices().difference(g.closed_neighbors(u)).iter().filter(|&v| v > u) {
                check_pair(&g, u, v);
            }
        }
    }
}

#[test]
fn refinements_are_nested() {
    for g in labeled_census(6) {
        let strong = find_strong_asteroidal_triples(&g, &budget());
        let weak = find_weak_asteroidal_triples(&g, &budget());
        for s in &strong.found {
            assert!(weak.found.iter().any(|w| w.asteroid.members == s.asteroid.members));
        }
        let wq = find_weak_asteroidal_quadruples(&g, &budget());
        let pq = find_parallel_asteroidal_quadruples(&g, &budget());
        for p in &pq.found {
            assert!(p.verify(&g));
            assert!(wq.found.iter().any(|w| w.asteroid.members == p.asteroid.members));
        }
        assert!(strong.undecided.is_empty() && wq.undecided.is_empty());
    }
}

#[test]
fn named_asteroids() {
    let b = budget();
    let sun = generate(&FamilySpec::Sun { k: 3 }).unwrap();
    let s = find_strong_asteroidal_triples(&sun, &b);
    assert_eq!(s.found.len(), 1);
    assert_eq!(s.found[0].asteroid.members, vec![3, 4, 5]);
    assert_eq!(find_weak_asteroidal_quadruples(&sun, &b).decision(), Decision::No);

    let spider3 = generate(&FamilySpec::Spider { legs: 3 }).unwrap();
    assert!(asteroidal_triple_members(&spider3).contains(&[2, 4, 6]));
    assert_eq!(find_strong_asteroidal_triples(&spider3, &b).decision(), Decision::No);
    assert!(find_asteroidal_quadruples(&spider3).is_empty());

    let spider4 = generate(&FamilySpec::Spider { legs: 4 }).unwrap();
    assert!(asteroidal_quadruple_members(&spider4).contains(&[2, 4, 6, 8]));
    assert_eq!(find_weak_asteroidal_quadruples(&spider4, &b).decision(), Decision::No);
    assert_eq!(find_parallel_asteroidal_quadruples(&spider4, &b).decision(), Decision::No);

    let f23 = generate(&FamilySpec::F23).unwrap();
    assert_eq!(find_strong_asteroidal_triples(&f23, &b).decision(), Decision::No);
    assert_eq!(find_weak_asteroidal_quadruples(&f23, &b).decision(), Decision::Yes);
    assert_eq!(find_parallel_asteroidal_quadruples(&f23, &b).decision(), Decision::Yes);

    let gadget = generate(&FamilySpec::Gadget { ell: 2 }).unwrap();
    let p = find_parallel_asteroidal_quadruples(&gadget, &b);
    assert_eq!(p.decision(), Decision::Yes);
    assert!(p.found.iter().all(|x| x.verify(&gadget)));
}

#[test]
fn avoiding_path_examples() {
    use pathgraph_core::asteroid::avoiding_path;
    let spider3 = generate(&FamilySpec::Spider { legs: 3 }).unwrap();
    assert_eq!(avoiding_path(&spider3, 2, 4, 6).unwrap().unwrap().path, vec![2, 1, 0, 3, 4]);
    let p5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    assert!(avoiding_path(&p5, 0, 4, 2).unwrap().is_none());
    let sun = generate(&FamilySpec::Sun { k: 3 }).unwrap();
    assert_eq!(avoiding_path(&sun, 3, 4, 5).unwrap().unwrap().path, vec![3, 1, 4]);
}
