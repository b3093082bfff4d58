//! Structure toolkit for chordal graphs and the path-graph hierarchy
//!
//! interval ⊂ rooted path ⊂ directed path ⊂ path ⊂ chordal.
//!
//! The crate provides clique trees (construction, exhaustive enumeration, separator
//! multiplicities, path/directed/rooted orientation checks), asteroidal triples and
//! quadruples, strong paths with their type-1/type-2 attachments, and recognizers for the
//! four classes with two independent routes each where available. The [`harness`] module
//! holds named graph families and the exhaustive survey machinery used to cross-check the
//! characterization theorems on small graphs.

pub mod asteroid;
pub mod bitset;
pub mod clique_tree;
pub mod dot;
pub mod error;
pub mod graph;
pub mod harness;
pub mod recognize;

pub use asteroid::{
    AsteroidKind, AsteroidWitness, Attachment, AttachmentRecord, AvoidingPath, Budget, Decision, Findings,
    LinkedAsteroid, Search, StrongLink, StrongPathWitness,
};
pub use bitset::BitSet;
pub use clique_tree::{build_clique_tree, enumerate_clique_trees, separator_multiplicity, CliqueTree, CliqueTreeSet, NodeSet, Separator};
pub use error::{Error, Result};
pub use graph::{
    chordality, maximal_cliques, parse_edge_list, parse_graph6, read_graphs, write_edge_list, write_graph6,
    ChordalityWitness, Graph, GraphInput, VertexSet,
};
pub use recognize::{
    classify, recognize, recognize_directed_path, recognize_interval, recognize_path, recognize_rooted_path,
    Certificate, ClassVerdict, Classification, GraphClass, Route,
};
