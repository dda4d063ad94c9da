//! Minimum cuts between vertex sets, pairwise edge-connectivity, Gomory–Hu
//! trees and exhaustive enumeration of minimum separations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Multigraph;
use crate::separation::CutSeparation;
use crate::vertex_set::VertexSet;

/// Default bound on the number of minimum cuts enumerated per query.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    pub separation: CutSeparation,
}

fn check_terminals(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<()> {
    for x in [s, t] {
        if x.universe() != g.vertex_count() {
            return Err(Error::UniverseMismatch(x.universe(), g.vertex_count()));
        }
        if x.is_empty() {
            return Err(Error::EmptyTerminalSet);
        }
    }
    if let Some(v) = s.intersection(t).first() {
        return Err(Error::OverlappingTerminals(v));
    }
    Ok(())
}

/// Contracts `s` and `t` to single vertices and runs a maximum flow between
/// them. Returns the network with the flow in place.
fn solve(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<(Vec<usize>, FlowNetwork, usize, usize, u64)> {
    let c = g.contract(&[s.clone(), t.clone()])?;
    let (cs, ct) = (c.mapping[s.first().unwrap()], c.mapping[t.first().unwrap()]);
    let mut net = FlowNetwork::from_graph(&c.graph);
    let value = net.max_flow(cs, ct);
    Ok((c.mapping, net, cs, ct, value))
}

fn expand(mapping: &[usize], contracted_side: &VertexSet) -> VertexSet {
    VertexSet::from_members(
        mapping.len(),
        (0..mapping.len()).filter(|&v| contracted_side.contains(mapping[v])),
    )
}

/// Moves components of `side` that miss `s`, and components of its complement
/// that miss `t`, across until no such component remains. Smallest canonical
/// component first. Never increases the cut order.
pub fn prune_to_bond(g: &Multigraph, side: &VertexSet, s: &VertexSet, t: &VertexSet) -> VertexSet {
    let mut side = side.clone();
    loop {
        if let Some(stray) = g.components_within(&side).into_iter().find(|c| c.is_disjoint(s)) {
            side = side.difference(&stray);
            continue;
        }
        if let Some(stray) = g
            .components_within(&side.complement())
            .into_iter()
            .find(|c| c.is_disjoint(t))
        {
            side.union_with(&stray);
            continue;
        }
        return side;
    }
}

/// Minimum number of edges (with multiplicity) separating `s` from `t`, and a
/// separation realizing it with `s` on one side and `t` on the other.
///
/// The side returned is the inclusion-minimal source side, pruned so that
/// every component of a side meets that side's terminals. When `s` and `t`
/// are each inseparable by cuts of that order (for instance, blocks), both
/// sides come out connected.
pub fn min_cut(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<MinCut> {
    check_terminals(g, s, t)?;
    g.ensure_connected()?;
    let (mapping, net, cs, _, value) = solve(g, s, t)?;
    let raw = expand(&mapping, &net.residual_reachable(cs));
    let side = prune_to_bond(g, &raw, s, t);
    let separation = CutSeparation::new(g, &side)?;
    if separation.order() != value {
        return Err(Error::Internal(format!(
            "pruned cut has order {} but flow value is {value}",
            separation.order()
        )));
    }
    Ok(MinCut { value, separation })
}

/// Pairwise edge-connectivity `λ(u, v)` by maximum flow.
pub fn lambda(g: &Multigraph, u: usize, v: usize) -> Result<u64> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut net = FlowNetwork::from_graph(g);
    Ok(net.max_flow(u, v))
}

/// All separations `{A, B}` with `s ⊆ A`, `t ⊆ B`, order equal to the
/// minimum, and both sides connected. Canonical order.
pub fn enumerate_min_separations(
    g: &Multigraph,
    s: &VertexSet,
    t: &VertexSet,
    cap: usize,
) -> Result<Vec<CutSeparation>> {
    check_terminals(g, s, t)?;
    let (mapping, net, cs, ct, value) = solve(g, s, t)?;
    let mut out = Vec::new();
    for contracted in net.min_cut_source_sides(cs, ct, cap)? {
        let side = expand(&mapping, &contracted);
        let sep = CutSeparation::with_order(&side, value);
        if sep.is_bond(g) {
            debug_assert_eq!(g.cut_order(&side), value);
            out.push(sep);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u64,
}

/// A weighted spanning tree on the vertices of a graph whose path minima are
/// the pairwise edge-connectivities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GomoryHuTree {
    n: usize,
    edges: Vec<TreeEdge>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl GomoryHuTree {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    /// Tree edge indices on the `u`-`v` path.
    fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut via = vec![None; self.n];
        let mut seen = VertexSet::singleton(self.n, u);
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &(y, e) in &self.adjacency[x] {
                if seen.insert(y) {
                    via[y] = Some((x, e));
                    stack.push(y);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = v;
        while let Some((prev, e)) = via[cur] {
            path.push(e);
            cur = prev;
        }
        path
    }

    /// Minimum edge weight on the tree path between `u` and `v`.
    pub fn lambda(&self, u: usize, v: usize) -> Result<u64> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        Ok(self.path(u, v).into_iter().map(|e| self.edges[e].weight).min().unwrap())
    }

    /// The side containing `edges[index].u` after deleting that tree edge.
    pub fn fundamental_side(&self, index: usize) -> VertexSet {
        let root = self.edges[index].u;
        let mut seen = VertexSet::singleton(self.n, root);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &(y, e) in &self.adjacency[x] {
                if e != index && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn fundamental_cuts(&self, g: &Multigraph) -> Vec<CutSeparation> {
        (0..self.edges.len())
            .map(|i| {
                let side = self.fundamental_side(i);
                CutSeparation::with_order(&side, g.cut_order(&side))
            })
            .collect()
    }

    /// Maximal vertex classes joined by tree edges of weight at least `k`.
    pub fn classes_at_least(&self, within: &VertexSet, k: u64) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in within.iter() {
            if !seen.insert(start) {
                continue;
            }
            let mut class = VertexSet::singleton(self.n, start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(y, e) in &self.adjacency[x] {
                    if self.edges[e].weight >= k && within.contains(y) && seen.insert(y) {
                        class.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(class);
        }
        out.sort();
        out
    }

    /// Smallest weight among tree edges with both ends in `within`.
    pub fn min_weight_within(&self, within: &VertexSet) -> Option<u64> {
        self.edges
            .iter()
            .filter(|e| within.contains(e.u) && within.contains(e.v))
            .map(|e| e.weight)
            .min()
    }
}

/// Gomory–Hu tree by the contraction scheme.
///
/// Supernodes of a growing tree are split one at a time: for a supernode `X`
/// and two of its vertices `s`, `t`, every component of the tree minus `X` is
/// contracted, a minimum `s`-`t` cut is taken in the contracted graph, `X` is
/// split along it and each neighbouring subtree follows its contracted vertex.
/// The fundamental cuts of the result are minimum cuts of `g`.
pub fn gomory_hu(g: &Multigraph) -> Result<GomoryHuTree> {
    g.ensure_connected()?;
    let n = g.vertex_count();
    let mut supernodes: Vec<VertexSet> = vec![VertexSet::full(n)];
    let mut tree: Vec<(usize, usize, u64)> = Vec::new();

    while let Some(x) = supernodes.iter().position(|s| s.len() >= 2) {
        let mut members = supernodes[x].iter();
        let (s, t) = (members.next().unwrap(), members.next().unwrap());

        // Subtrees hanging off x, keyed by the neighbouring supernode.
        let mut hanging: Vec<(usize, VertexSet)> = Vec::new();
        for &(a, b, _) in &tree {
            let y = match (a == x, b == x) {
                (true, _) => b,
                (_, true) => a,
                _ => continue,
            };
            let mut union = VertexSet::empty(n);
            let mut stack = vec![y];
            let mut visited = vec![false; supernodes.len()];
            visited[x] = true;
            visited[y] = true;
            while let Some(z) = stack.pop() {
                union.union_with(&supernodes[z]);
                for &(p, q, _) in &tree {
                    let next = if p == z { q } else if q == z { p } else { continue };
                    if !visited[next] {
                        visited[next] = true;
                        stack.push(next);
                    }
                }
            }
            hanging.push((y, union));
        }

        let parts: Vec<VertexSet> = hanging.iter().map(|(_, u)| u.clone()).collect();
        let c = g.contract(&parts)?;
        let mut net = FlowNetwork::from_graph(&c.graph);
        let value = net.max_flow(c.mapping[s], c.mapping[t]);
        let source = net.residual_reachable(c.mapping[s]);

        let split: VertexSet = VertexSet::from_members(
            n,
            supernodes[x].iter().filter(|&v| !source.contains(c.mapping[v])),
        );
        let new_id = supernodes.len();
        supernodes[x] = supernodes[x].difference(&split);
        supernodes.push(split);

        for (y, union) in &hanging {
            let rep = c.mapping[union.first().unwrap()];
            if !source.contains(rep) {
                for edge in tree.iter_mut() {
                    if (edge.0 == x && edge.1 == *y) || (edge.1 == x && edge.0 == *y) {
                        *edge = (new_id, *y, edge.2);
                    }
                }
            }
        }
        tree.push((x, new_id, value));
    }

    let vertex_of: Vec<usize> = supernodes.iter().map(|s| s.first().unwrap()).collect();
    let mut edges: Vec<TreeEdge> = tree
        .into_iter()
        .map(|(a, b, w)| {
            let (u, v) = (vertex_of[a].min(vertex_of[b]), vertex_of[a].max(vertex_of[b]));
            TreeEdge { u, v, weight: w }
        })
        .collect();
    edges.sort_by_key(|e| (e.u, e.v));
    let mut adjacency = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.u].push((e.v, i));
        adjacency[e.v].push((e.u, i));
    }
    Ok(GomoryHuTree { n, edges, adjacency })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vs(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied())
    }

    #[test]
    fn min_cut_examples() {
        let b = fixtures::bowtie();
        let mc = min_cut(&b, &vs(6, &[1]), &vs(6, &[4])).unwrap();
        assert_eq!(mc.value, 1);
        assert_eq!(mc.separation.side().to_vec(), vec![0, 1, 2]);

        let ex1 = fixtures::ex1();
        let mc = min_cut(&ex1.graph, &ex1.copies[0], &ex1.copies[1]).unwrap();
        assert_eq!(mc.value, 2);
        assert!(mc.separation.is_bond(&ex1.graph));

        let k2 = fixtures::k2();
        let mc = min_cut(&k2, &vs(2, &[0]), &vs(2, &[1])).unwrap();
        assert_eq!(mc.value, 1);
        assert_eq!(mc.separation.side().to_vec(), vec![0]);
    }

    #[test]
    fn min_cut_errors() {
        let c4 = fixtures::c4();
        assert_eq!(
            min_cut(&c4, &vs(4, &[0, 1]), &vs(4, &[1])).unwrap_err(),
            Error::OverlappingTerminals(1)
        );
        assert_eq!(min_cut(&c4, &vs(4, &[]), &vs(4, &[1])).unwrap_err(), Error::EmptyTerminalSet);
    }

    #[test]
    fn pruning_moves_stray_components() {
        // Path 0-1-2-3; side {0, 2} has component {2} missing S = {0}.
        let g = fixtures::path(4);
        let side = prune_to_bond(&g, &vs(4, &[0, 2]), &vs(4, &[0]), &vs(4, &[3]));
        assert_eq!(side.to_vec(), vec![0]);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(&fixtures::c4(), 0, 2).unwrap(), 2);
        let ex1 = fixtures::ex1();
        assert_eq!(lambda(&ex1.graph, ex1.hubs[0], ex1.hubs[1]).unwrap(), 2);
        let k4 = fixtures::k4();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(lambda(&k4, u, v).unwrap(), 3);
                }
            }
        }
        assert_eq!(lambda(&k4, 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn gomory_hu_examples() {
        let b = fixtures::bowtie();
        let t = gomory_hu(&b).unwrap();
        assert_eq!(t.edges().len(), 5);
        for e in t.edges() {
            let bridge = (e.u, e.v) == (0, 3);
            assert_eq!(e.weight, if bridge { 1 } else { 2 }, "{e:?}");
        }
        assert!(t.edges().iter().any(|e| (e.u, e.v) == (0, 3)));

        let t = gomory_hu(&fixtures::k2()).unwrap();
        assert_eq!(t.edges(), &[TreeEdge { u: 0, v: 1, weight: 1 }]);

        let t = gomory_hu(&fixtures::c4()).unwrap();
        assert!(t.edges().iter().all(|e| e.weight == 2));
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(t.lambda(u, v).unwrap(), 2);
            }
        }
    }

    #[test]
    fn gomory_hu_rejects_disconnected() {
        let g = Multigraph::from_edges(3, [(0, 1, 1)]).unwrap();
        assert_eq!(gomory_hu(&g).unwrap_err(), Error::Disconnected { components: 2 });
    }

    #[test]
    fn enumerate_examples() {
        let c4 = fixtures::c4();
        let seps = enumerate_min_separations(&c4, &vs(4, &[0]), &vs(4, &[2]), 100).unwrap();
        let sides: Vec<Vec<usize>> = seps.iter().map(|s| s.side().to_vec()).collect();
        assert_eq!(sides, vec![vec![0], vec![0, 1], vec![0, 3], vec![0, 1, 3]]);

        let b = fixtures::bowtie();
        let seps = enumerate_min_separations(&b, &vs(6, &[0, 1, 2]), &vs(6, &[3, 4, 5]), 100).unwrap();
        assert_eq!(seps.len(), 1);
        assert_eq!(seps[0].side().to_vec(), vec![0, 1, 2]);

        let k2 = fixtures::k2();
        let seps = enumerate_min_separations(&k2, &vs(2, &[0]), &vs(2, &[1]), 100).unwrap();
        assert_eq!(seps.len(), 1);
    }
}
