//! Finite undirected multigraphs and the JSON graph document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite loopless multigraph on vertices `0..n`.
///
/// Parallel edges are stored as a multiplicity per unordered pair, and every
/// cut order counts multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    /// Keyed by `(u, v)` with `u < v`.
    edges: BTreeMap<(usize, usize), u64>,
    adjacency: Vec<Vec<(usize, u64)>>,
    labels: BTreeMap<usize, String>,
}

/// One unordered vertex pair with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u64,
}

/// Result of [`Multigraph::contract`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Multigraph,
    /// `mapping[old] = new`.
    pub mapping: Vec<usize>,
}

/// Edges crossing a vertex bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutEdges {
    pub edges: Vec<Edge>,
    pub total: u64,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: BTreeMap::new(),
            adjacency: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from `(u, v, multiplicity)` triples, summing repeated pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v, m) in edges {
            g.add_edge(u, v, m)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, multiplicity: u64) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity { u, v });
        }
        let key = (u.min(v), u.max(v));
        *self.edges.entry(key).or_insert(0) += multiplicity;
        self.rebuild_adjacency_for(key);
        Ok(())
    }

    fn rebuild_adjacency_for(&mut self, (u, v): (usize, usize)) {
        let m = self.edges[&(u, v)];
        for (a, b) in [(u, v), (v, u)] {
            match self.adjacency[a].iter_mut().find(|(w, _)| *w == b) {
                Some(entry) => entry.1 = m,
                None => {
                    self.adjacency[a].push((b, m));
                    self.adjacency[a].sort_unstable();
                }
            }
        }
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of distinct adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.edges.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &multiplicity)| Edge { u, v, multiplicity })
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, u64)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.adjacency[v].iter().map(|&(_, m)| m).sum()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Label if present, otherwise the numeric identifier.
    pub fn display_vertex(&self, v: usize) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_string)
    }

    /// Connected components, each as a vertex set, in canonical order.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of the subgraph induced by `within`, in canonical order.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &(y, _) in &self.adjacency[x] {
                    if within.contains(y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn induces_connected(&self, side: &VertexSet) -> bool {
        !side.is_empty() && self.components_within(side).len() == 1
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let components = self.components().len();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(())
    }

    /// Contracts each part to a single vertex.
    ///
    /// Vertices outside every part keep their own vertex. New identifiers are
    /// assigned in order of the smallest old vertex of each class. Edges inside
    /// a class vanish; parallel edges accumulate.
    pub fn contract(&self, parts: &[VertexSet]) -> Result<Contraction> {
        const UNASSIGNED: usize = usize::MAX;
        let mut class = vec![UNASSIGNED; self.n];
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != self.n {
                return Err(Error::UniverseMismatch(part.universe(), self.n));
            }
            if part.is_empty() {
                return Err(Error::EmptyPart);
            }
            for v in part.iter() {
                if class[v] != UNASSIGNED {
                    return Err(Error::OverlappingParts(v));
                }
                class[v] = i;
            }
        }
        let mut mapping = vec![UNASSIGNED; self.n];
        let mut part_target = vec![UNASSIGNED; parts.len()];
        let mut next = 0;
        for v in 0..self.n {
            let target = match class[v] {
                UNASSIGNED => {
                    next += 1;
                    next - 1
                }
                p => {
                    if part_target[p] == UNASSIGNED {
                        part_target[p] = next;
                        next += 1;
                    }
                    part_target[p]
                }
            };
            mapping[v] = target;
        }
        let mut graph = Multigraph::new(next);
        for e in self.edges() {
            let (a, b) = (mapping[e.u], mapping[e.v]);
            if a != b {
                graph.add_edge(a, b, e.multiplicity)?;
            }
        }
        for (&v, label) in &self.labels {
            if class[v] == UNASSIGNED {
                graph.labels.insert(mapping[v], label.clone());
            }
        }
        Ok(Contraction { graph, mapping })
    }

    /// Total multiplicity of edges between `side` and its complement.
    pub fn cut_order(&self, side: &VertexSet) -> u64 {
        let mut total = 0;
        for u in side.iter() {
            for &(v, m) in &self.adjacency[u] {
                if !side.contains(v) {
                    total += m;
                }
            }
        }
        total
    }

    /// The crossing edges of the bipartition `{side, V \ side}`.
    pub fn cut_edges(&self, side: &VertexSet) -> Result<CutEdges> {
        self.check_side(side)?;
        let edges: Vec<Edge> = self
            .edges()
            .filter(|e| side.contains(e.u) != side.contains(e.v))
            .collect();
        let total = edges.iter().map(|e| e.multiplicity).sum();
        Ok(CutEdges { edges, total })
    }

    pub(crate) fn check_side(&self, side: &VertexSet) -> Result<()> {
        if side.universe() != self.n {
            return Err(Error::UniverseMismatch(side.universe(), self.n));
        }
        if side.is_empty() || side.is_full() {
            return Err(Error::ImproperSide);
        }
        Ok(())
    }

    /// Relabels vertices by `perm` (`v -> perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v], e.multiplicity)
                .expect("permutation of a valid graph");
        }
        for (&v, l) in &self.labels {
            g.labels.insert(perm[v], l.clone());
        }
        g
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.n,
            edges: self
                .edges()
                .map(|e| {
                    if e.multiplicity == 1 {
                        vec![e.u as u64, e.v as u64]
                    } else {
                        vec![e.u as u64, e.v as u64, e.multiplicity]
                    }
                })
                .collect(),
            labels: if self.labels.is_empty() {
                None
            } else {
                Some(self.labels.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
            },
        }
    }
}

/// The on-disk graph format.
///
/// `{"vertices": n, "edges": [[u, v] | [u, v, multiplicity]], "labels": {"0": "name"}}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<Multigraph> {
        if self.vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Multigraph::new(self.vertices);
        for (i, e) in self.edges.iter().enumerate() {
            let (u, v, m) = match e.as_slice() {
                [u, v] => (*u, *v, 1),
                [u, v, m] => (*u, *v, *m),
                _ => {
                    return Err(Error::MalformedDocument(format!(
                        "edge #{i} must have 2 or 3 entries, found {}",
                        e.len()
                    )))
                }
            };
            let idx = |x: u64| usize::try_from(x).unwrap_or(usize::MAX);
            g.add_edge(idx(u), idx(v), m)?;
        }
        for (key, label) in self.labels.into_iter().flatten() {
            let v: usize = key
                .parse()
                .map_err(|_| Error::MalformedDocument(format!("label key {key:?} is not an index")))?;
            g.set_label(v, label)?;
        }
        Ok(g)
    }
}

/// Parses a graph document. Connectivity is checked by the decomposition
/// entry points, not here.
pub fn load_graph(document: &str) -> Result<Multigraph> {
    let doc: GraphDocument =
        serde_json::from_str(document).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.into_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied())
    }

    #[test]
    fn load_k2() {
        let g = load_graph(r#"{"vertices":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 1), 1);
    }

    #[test]
    fn load_triple_edge_and_aggregation() {
        let g = load_graph(r#"{"vertices":2,"edges":[[0,1,3]]}"#).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        let g = load_graph(r#"{"vertices":2,"edges":[[0,1],[1,0,2]]}"#).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.pair_count(), 1);
    }

    #[test]
    fn load_ex1_document() {
        let doc = serde_json::to_string(&fixtures::ex1().graph.to_document()).unwrap();
        let g = load_graph(&doc).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.pair_count(), 21);
        assert!(g.edges().all(|e| e.multiplicity == 1));
        assert_eq!(g.label(0), Some("v1"));
    }

    #[test]
    fn load_errors() {
        assert!(matches!(load_graph("{"), Err(Error::MalformedDocument(_))));
        assert!(matches!(
            load_graph(r#"{"vertices":2,"edges":[[0]]}"#),
            Err(Error::MalformedDocument(_))
        ));
        assert_eq!(
            load_graph(r#"{"vertices":2,"edges":[[1,1]]}"#),
            Err(Error::LoopEdge(1))
        );
        assert_eq!(
            load_graph(r#"{"vertices":2,"edges":[[0,2]]}"#),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(load_graph(r#"{"vertices":0,"edges":[]}"#), Err(Error::EmptyGraph));
        assert!(matches!(
            load_graph(r#"{"vertices":2,"edges":[],"labels":{"x":"a"}}"#),
            Err(Error::MalformedDocument(_))
        ));
    }

    #[test]
    fn components_examples() {
        let k2 = fixtures::k2();
        assert_eq!(k2.components(), vec![set(2, &[0, 1])]);

        let ex1 = fixtures::ex1();
        let mut g = Multigraph::new(12);
        for e in ex1.graph.edges() {
            let f1 = (e.u == ex1.hubs[0] && e.v == ex1.hubs[1]) || (e.u == ex1.hubs[0] && e.v == ex1.hubs[2]);
            if !f1 {
                g.add_edge(e.u, e.v, e.multiplicity).unwrap();
            }
        }
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&ex1.copies[0]));
        assert!(comps.contains(&ex1.copies[0].complement()));

        let bowtie = fixtures::bowtie();
        let mut g = Multigraph::new(6);
        for e in bowtie.edges().filter(|e| (e.u, e.v) != (0, 3)) {
            g.add_edge(e.u, e.v, e.multiplicity).unwrap();
        }
        assert_eq!(g.components(), vec![set(6, &[0, 1, 2]), set(6, &[3, 4, 5])]);
    }

    #[test]
    fn contract_examples() {
        let c4 = fixtures::c4();
        let c = c4.contract(&[set(4, &[0, 1])]).unwrap();
        assert_eq!(c.mapping, vec![0, 0, 1, 2]);
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.multiplicity(0, 1), 1);
        assert_eq!(c.graph.multiplicity(1, 2), 1);
        assert_eq!(c.graph.multiplicity(0, 2), 1);

        let k2 = fixtures::k2();
        let c = k2.contract(&[set(2, &[0])]).unwrap();
        assert_eq!(c.graph.edges().collect::<Vec<_>>(), k2.edges().collect::<Vec<_>>());

        let bowtie = fixtures::bowtie();
        let c = bowtie.contract(&[set(6, &[0, 1, 2]), set(6, &[3, 4, 5])]).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.multiplicity(0, 1), 1);

        assert_eq!(
            c4.contract(&[set(4, &[0, 1]), set(4, &[1, 2])]).unwrap_err(),
            Error::OverlappingParts(1)
        );
    }

    #[test]
    fn cut_edges_examples() {
        let c4 = fixtures::c4();
        let cut = c4.cut_edges(&set(4, &[0])).unwrap();
        assert_eq!(cut.total, 2);
        assert_eq!(
            cut.edges.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            vec![(0, 1), (0, 3)]
        );

        let ex1 = fixtures::ex1();
        let cut = ex1.graph.cut_edges(&ex1.copies[0]).unwrap();
        assert_eq!(cut.total, 2);
        let h = &ex1.hubs;
        let mut expect = vec![(h[0], h[1]), (h[0], h[2])];
        expect.sort();
        assert_eq!(cut.edges.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(), expect);

        let triple = Multigraph::from_edges(2, [(0, 1, 3)]).unwrap();
        let cut = triple.cut_edges(&set(2, &[0])).unwrap();
        assert_eq!(cut.edges.len(), 1);
        assert_eq!(cut.total, 3);

        assert_eq!(c4.cut_edges(&set(4, &[])), Err(Error::ImproperSide));
        assert_eq!(c4.cut_edges(&set(4, &[0, 1, 2, 3])), Err(Error::ImproperSide));
    }
}
