//! Tree-cut decompositions whose fundamental cuts are a given nested set of
//! bonds.
//!
//! Every separation is oriented so the root vertex lies on its second side.
//! The first sides then form a laminar family; its inclusion forest, hung
//! below a node for the whole vertex set, is the decomposition tree. A node's
//! part is its set minus the sets of its children, so parts may be empty.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::blocks::block_hierarchy;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::separation::CutSeparation;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub part: VertexSet,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// The edge between a node and its parent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCutEdge {
    pub child: usize,
    pub parent: usize,
    pub separation: CutSeparation,
}

/// A rooted tree with one possibly empty part per node. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCutDecomposition {
    vertices: usize,
    nodes: Vec<TreeNode>,
    edges: Vec<TreeCutEdge>,
}

impl TreeCutDecomposition {
    /// Assembles a decomposition from parent links and parts, deriving the
    /// edge map from the fundamental cuts and checking every invariant.
    /// `parents[0]` must be `None`, every other node's parent must come
    /// earlier.
    pub fn from_tree(g: &Multigraph, parents: &[Option<usize>], parts: Vec<VertexSet>) -> Result<Self> {
        let n = g.vertex_count();
        if parents.len() != parts.len() || parents.is_empty() {
            return Err(Error::InvalidArgument("need one part per node and at least one node".into()));
        }
        let mut nodes: Vec<TreeNode> = parts
            .into_iter()
            .map(|part| TreeNode { part, parent: None, children: Vec::new() })
            .collect();
        for (t, p) in parents.iter().enumerate() {
            match (t, *p) {
                (0, None) => {}
                (t, Some(p)) if t > 0 && p < t => {
                    nodes[t].parent = Some(p);
                    nodes[p].children.push(t);
                }
                _ => return Err(Error::InvalidArgument(format!("bad parent link at node {t}"))),
            }
        }
        for node in &nodes {
            if node.part.universe() != n {
                return Err(Error::UniverseMismatch(node.part.universe(), n));
            }
        }
        let mut d = TreeCutDecomposition { vertices: n, nodes, edges: Vec::new() };
        d.check_near_partition()?;
        let unions = d.subtree_unions();
        for t in 1..d.nodes.len() {
            let side = &unions[t];
            if side.is_empty() || side.is_full() {
                return Err(Error::NotDense { child: t, parent: d.nodes[t].parent.unwrap() });
            }
            d.edges.push(TreeCutEdge {
                child: t,
                parent: d.nodes[t].parent.unwrap(),
                separation: CutSeparation::with_order(side, g.cut_order(side)),
            });
        }
        d.check(g)?;
        Ok(d)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[TreeCutEdge] {
        &self.edges
    }

    pub fn parts(&self) -> Vec<&VertexSet> {
        self.nodes.iter().map(|t| &t.part).collect()
    }

    /// Non-empty parts in canonical order.
    pub fn nonempty_parts(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.nodes.iter().map(|t| t.part.clone()).filter(|p| !p.is_empty()).collect();
        out.sort();
        out
    }

    /// Union of parts over each node's subtree.
    fn subtree_unions(&self) -> Vec<VertexSet> {
        let mut unions: Vec<VertexSet> = self.nodes.iter().map(|t| t.part.clone()).collect();
        // Parents precede children, so a reverse sweep accumulates bottom-up.
        for t in (1..self.nodes.len()).rev() {
            let p = self.nodes[t].parent.unwrap();
            let u = unions[t].clone();
            unions[p].union_with(&u);
        }
        unions
    }

    /// For every tree edge, the separation of part-unions over the two
    /// components of the tree minus that edge.
    pub fn fundamental_cuts(&self, g: &Multigraph) -> Result<Vec<CutSeparation>> {
        let unions = self.subtree_unions();
        let mut cuts = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let side = &unions[e.child];
            if side.is_empty() || side.is_full() {
                return Err(Error::NotDense { child: e.child, parent: e.parent });
            }
            cuts.push(CutSeparation::with_order(side, g.cut_order(side)));
        }
        cuts.sort();
        Ok(cuts)
    }

    fn check_near_partition(&self) -> Result<()> {
        let mut seen = VertexSet::empty(self.vertices);
        for (t, node) in self.nodes.iter().enumerate() {
            if let Some(v) = seen.intersection(&node.part).first() {
                return Err(Error::NotNearPartition(format!("vertex {v} lies in two parts (second at node {t})")));
            }
            seen.union_with(&node.part);
        }
        if !seen.is_full() {
            let missing = seen.complement();
            return Err(Error::NotNearPartition(format!("vertices {missing} lie in no part")));
        }
        Ok(())
    }

    /// Near-partition, density, edge map against fundamental cuts, and for
    /// every node `part = ⋂ D` over the incident edges with `D` the side on
    /// that node's end.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        self.check_near_partition()?;
        let unions = self.subtree_unions();
        for e in &self.edges {
            let side = &unions[e.child];
            if side.is_empty() || side.is_full() {
                return Err(Error::NotDense { child: e.child, parent: e.parent });
            }
            if e.separation.side_containing(side.first().unwrap()) != *side {
                return Err(Error::Internal(format!(
                    "edge {}-{} maps to {} but its fundamental cut has side {side}",
                    e.child, e.parent, e.separation
                )));
            }
            if e.separation.order() != g.cut_order(side) {
                return Err(Error::Internal(format!("edge {}-{} carries a wrong order", e.child, e.parent)));
            }
        }
        for (t, node) in self.nodes.iter().enumerate() {
            let mut x = VertexSet::full(self.vertices);
            if t > 0 {
                x = x.intersection(&unions[t]);
            }
            for &c in &node.children {
                x = x.intersection(&unions[c].complement());
            }
            if x != node.part {
                return Err(Error::Internal(format!(
                    "part of node {t} is {} but the intersection of its near sides is {x}",
                    node.part
                )));
            }
        }
        Ok(())
    }

    /// Graphviz rendering: nodes list their part's vertices (labels where
    /// present, `∅` when empty), edges carry the cut order.
    pub fn to_dot(&self, g: &Multigraph) -> String {
        let mut out = String::from("graph treecut {\n  node [shape=ellipse];\n");
        for (t, node) in self.nodes.iter().enumerate() {
            let label = if node.part.is_empty() {
                "∅".to_string()
            } else {
                let names: Vec<String> = node.part.iter().map(|v| g.display_vertex(v)).collect();
                format!("{{{}}}", names.join(","))
            };
            let _ = writeln!(out, "  t{t} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  t{} -- t{} [label=\"order={}\"];", e.parent, e.child, e.separation.order());
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "nodes": self.nodes.iter().enumerate().map(|(t, node)| serde_json::json!({
                "id": t,
                "part": node.part,
                "parent": node.parent,
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "nodes": [e.parent, e.child],
                "separation": e.separation,
            })).collect::<Vec<_>>(),
        })
    }
}

fn check_input(g: &Multigraph, m: &[CutSeparation]) -> Result<()> {
    let n = g.vertex_count();
    let mut seen = BTreeSet::new();
    for s in m {
        if s.universe() != n {
            return Err(Error::UniverseMismatch(s.universe(), n));
        }
        if !seen.insert(s) {
            return Err(Error::DuplicateSeparation(s.to_string()));
        }
        if !s.is_bond(g) {
            return Err(Error::NotBond(s.to_string()));
        }
    }
    for (i, a) in m.iter().enumerate() {
        for b in &m[i + 1..] {
            if a.crosses(b) {
                return Err(Error::NotNested(a.to_string(), b.to_string()));
            }
        }
    }
    Ok(())
}

/// A tree-cut decomposition whose fundamental cuts are exactly `m`.
pub fn build_tree_cut(g: &Multigraph, m: &[CutSeparation], root: usize) -> Result<TreeCutDecomposition> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    check_input(g, m)?;

    // Larger sets first so every parent precedes its children; equal sizes
    // cannot nest.
    let mut sets: Vec<(VertexSet, &CutSeparation)> = m.iter().map(|s| (s.side_avoiding(root), s)).collect();
    sets.sort_by(|x, y| y.0.len().cmp(&x.0.len()).then_with(|| x.0.cmp(&y.0)));
    let mut set_parent: Vec<Option<usize>> = Vec::with_capacity(sets.len());
    for (i, (a, _)) in sets.iter().enumerate() {
        // The smallest strict superset is the last one met in this order.
        let p = (0..i).rev().find(|&j| a.is_subset(&sets[j].0));
        set_parent.push(p);
    }

    // Breadth-first numbering from the root node with children in canonical
    // order, so node ids do not depend on the input order.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); sets.len() + 1];
    for (i, p) in set_parent.iter().enumerate() {
        children[p.map_or(0, |j| j + 1)].push(i + 1);
    }
    for c in &mut children {
        c.sort_by(|&x, &y| sets[x - 1].0.cmp(&sets[y - 1].0));
    }
    let mut order = vec![0usize];
    let mut id_of = vec![0usize; sets.len() + 1];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &c in &children[x] {
            id_of[c] = order.len();
            order.push(c);
        }
    }

    let full = VertexSet::full(n);
    let mut parents = Vec::with_capacity(order.len());
    let mut parts = Vec::with_capacity(order.len());
    for &x in &order {
        let own = if x == 0 { &full } else { &sets[x - 1].0 };
        let mut part = own.clone();
        for &c in &children[x] {
            part = part.difference(&sets[c - 1].0);
        }
        parts.push(part);
        parents.push(if x == 0 {
            None
        } else {
            Some(id_of[set_parent[x - 1].map_or(0, |j| j + 1)])
        });
    }
    let d = TreeCutDecomposition::from_tree(g, &parents, parts)?;

    let mut input: Vec<CutSeparation> = m.to_vec();
    input.sort();
    if d.fundamental_cuts(g)? != input {
        return Err(Error::Internal("fundamental cuts differ from the input set".into()));
    }
    for e in &d.edges {
        let (_, s) = sets[order[e.child] - 1];
        if e.separation != *s {
            return Err(Error::Internal(format!("edge {}-{} maps to {} instead of {s}", e.child, e.parent, e.separation)));
        }
    }
    Ok(d)
}

/// Fundamental cuts of `d`.
pub fn fundamental_cuts(g: &Multigraph, d: &TreeCutDecomposition) -> Result<Vec<CutSeparation>> {
    d.fundamental_cuts(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KBlockCheck {
    pub k: u64,
    pub passed: bool,
    /// k-edge-blocks that are not a part.
    pub missing_blocks: Vec<VertexSet>,
    /// Non-empty parts that are not a k-edge-block.
    pub extra_parts: Vec<VertexSet>,
}

/// Whether the non-empty parts of `d` are exactly the k-edge-blocks.
pub fn verify_k_block_decomposition(g: &Multigraph, d: &TreeCutDecomposition, k: u64) -> Result<KBlockCheck> {
    let blocks = block_hierarchy(g)?.k_blocks(k)?;
    let parts = d.nonempty_parts();
    let missing_blocks: Vec<VertexSet> = blocks.iter().filter(|b| !parts.contains(b)).cloned().collect();
    let extra_parts: Vec<VertexSet> = parts.iter().filter(|p| !blocks.contains(p)).cloned().collect();
    Ok(KBlockCheck {
        k,
        passed: missing_blocks.is_empty() && extra_parts.is_empty(),
        missing_blocks,
        extra_parts,
    })
}
