//! Graphviz DOT rendering of clique trees and asteroid witnesses.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::asteroid::{AsteroidWitness, StrongLink, StrongPathWitness};
use crate::clique_tree::CliqueTree;
use crate::graph::{Graph, VertexSet};

fn set_label(s: VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// Nodes are labeled with their sorted clique, edges with their separator. Oriented trees are
/// drawn with arrowheads, and the root (if any) gets a double border.
pub fn clique_tree_to_dot(t: &CliqueTree) -> String {
    let oriented = t.is_oriented();
    let (kind, arrow) = if oriented { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{kind} clique_tree {{\n  node [shape=box];\n");
    for (i, &c) in t.cliques().iter().enumerate() {
        let border = if t.root() == Some(i) { ", peripheries=2" } else { "" };
        writeln!(out, "  q{i} [label=\"{}\"{border}];", set_label(c)).unwrap();
    }
    let arcs = t.arcs().unwrap_or_else(|| t.edges().to_vec());
    for (a, b) in arcs {
        let e = t.edge_index(a, b).unwrap();
        writeln!(out, "  q{a} {arrow} q{b} [label=\"{}\"];", set_label(t.labels()[e])).unwrap();
    }
    out.push_str("}\n");
    out
}

fn link_edges(link: &StrongPathWitness) -> Vec<(usize, usize)> {
    match &link.link {
        StrongLink::CommonNeighbor { w } => vec![(link.u, *w), (*w, link.v)],
        StrongLink::Paths { x, y, .. } => {
            let mut out = Vec::new();
            for seq in [x, y] {
                let full: Vec<usize> = std::iter::once(link.u).chain(seq.iter().copied()).chain([link.v]).collect();
                out.extend(full.windows(2).map(|w| (w[0], w[1])));
            }
            out
        }
    }
}

/// The whole graph with the asteroid's members doubled, avoiding-path edges dashed, and
/// strong-path edges bold.
pub fn witness_to_dot(g: &Graph, w: &AsteroidWitness, links: &[StrongPathWitness]) -> String {
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let avoiding: BTreeSet<(usize, usize)> =
        w.paths.iter().flat_map(|p| p.path.windows(2).map(|e| norm((e[0], e[1])))).collect();
    let strong: BTreeSet<(usize, usize)> = links.iter().flat_map(link_edges).map(norm).collect();
    let mut out = String::from("graph witness {\n");
    for v in 0..g.n() {
        let shape = if w.members.contains(&v) { "doublecircle" } else { "circle" };
        writeln!(out, "  {v} [shape={shape}];").unwrap();
    }
    for (a, b) in g.edges() {
        let style = if strong.contains(&(a, b)) {
            " [style=bold]"
        } else if avoiding.contains(&(a, b)) {
            " [style=dashed]"
        } else {
            ""
        };
        writeln!(out, "  {a} -- {b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asteroid::find_asteroidal_triples;
    use crate::clique_tree::build_clique_tree;

    #[test]
    fn p4_tree() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = build_clique_tree(&g).unwrap();
        let dot = clique_tree_to_dot(&t);
        assert_eq!(
            dot,
            "graph clique_tree {\n  node [shape=box];\n  q0 [label=\"0,1\"];\n  q1 [label=\"1,2\"];\n  \
             q2 [label=\"2,3\"];\n  q0 -- q1 [label=\"1\"];\n  q1 -- q2 [label=\"2\"];\n}\n"
        );
        let rooted = t.orient_rooted().unwrap().unwrap();
        let dot = clique_tree_to_dot(&rooted);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("q0 [label=\"0,1\", peripheries=2]"));
        assert!(dot.contains("q0 -> q1"));
    }

    #[test]
    fn witness_marks_members() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let w = find_asteroidal_triples(&g).remove(0);
        let dot = witness_to_dot(&g, &w, &[]);
        assert!(dot.contains("2 [shape=doublecircle]"));
        assert!(dot.contains("0 -- 1 [style=dashed]"));
    }
}
