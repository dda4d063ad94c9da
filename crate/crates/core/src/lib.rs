//! Edge-connectivity blocks of finite multigraphs, nested sets of bonds that
//! efficiently distinguish them, and the tree-cut decompositions those sets
//! induce.
//!
//! Vertices are `0..n`. Every vertex set carries its universe size and orders
//! canonically: by size, then lexicographically by sorted members. A
//! cut-separation is stored by its side containing vertex 0.

pub mod blocks;
pub mod corpus;
pub mod distinguish;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod generation;
pub mod graph;
pub mod mincut;
pub mod oracle;
pub mod separation;
pub mod treecut;
pub mod vertex_set;

pub use blocks::{block_hierarchy, Block, BlockPair, EdgeBlockHierarchy, Level};
pub use distinguish::{
    build_nested_set, build_nested_set_with, efficient_distinguishers, verify_nested_set, DistinguisherFamily,
    NestedBondSet, NestedSetReport,
};
pub use error::{Error, Result};
pub use generation::{check_equivalence, enumerate_cuts, is_generated, Generation, GenerationWitness, EquivalenceReport};
pub use graph::{load_graph, GraphDocument, Multigraph};
pub use mincut::{gomory_hu, lambda, min_cut, DEFAULT_ENUMERATION_CAP};
pub use separation::{CutSeparation, OrientedSeparation};
pub use treecut::{build_tree_cut, verify_k_block_decomposition, TreeCutDecomposition};
pub use vertex_set::VertexSet;
