//! Dinic maximum flow on an undirected multigraph and enumeration of all
//! minimum cuts through the closed sets of the residual network.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    flow: i64,
}

/// Flow network where every undirected edge of multiplicity `m` becomes a
/// pair of opposite arcs of capacity `m`, each the reverse of the other.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn from_graph(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNetwork {
            n,
            arcs: Vec::with_capacity(2 * g.pair_count()),
            out: vec![Vec::new(); n],
        };
        for e in g.edges() {
            let id = net.arcs.len();
            net.arcs.push(Arc { to: e.v, cap: e.multiplicity, flow: 0 });
            net.arcs.push(Arc { to: e.u, cap: e.multiplicity, flow: 0 });
            net.out[e.u].push(id);
            net.out[e.v].push(id + 1);
        }
        net
    }

    fn residual(&self, id: usize) -> u64 {
        (self.arcs[id].cap as i64 - self.arcs[id].flow) as u64
    }

    fn push(&mut self, id: usize, amount: u64) {
        self.arcs[id].flow += amount as i64;
        self.arcs[id ^ 1].flow -= amount as i64;
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.n];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let v = self.arcs[id].to;
                if level[v] == usize::MAX && self.residual(id) > 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, t: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let id = self.out[u][next[u]];
            let v = self.arcs[id].to;
            let r = self.residual(id);
            if r > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(r), level, next);
                if pushed > 0 {
                    self.push(id, pushed);
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Maximum `s`-`t` flow value. Leaves the flow in place for residual queries.
    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        assert_ne!(s, t);
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut next = vec![0; self.n];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Vertices reachable from `s` along arcs with positive residual capacity.
    pub fn residual_reachable(&self, s: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &id in &self.out[u] {
                let v = self.arcs[id].to;
                if self.residual(id) > 0 && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Every vertex set `A` with `s ∈ A`, `t ∉ A` and no residual arc leaving
    /// `A`. After a maximum flow these are exactly the source sides of the
    /// minimum `s`-`t` cuts.
    ///
    /// Strongly connected components of the residual network are condensed and
    /// the closed sets of the resulting order enumerated by branching: including
    /// a component forces its successors in, excluding it forces its
    /// predecessors out. Every branch yields at least one set, so the work is
    /// polynomial per output. Fails once more than `cap` sets are produced.
    pub fn min_cut_source_sides(&self, s: usize, t: usize, cap: usize) -> Result<Vec<VertexSet>> {
        let mut dg = DiGraph::<usize, ()>::with_capacity(self.n, self.arcs.len());
        let nodes: Vec<_> = (0..self.n).map(|v| dg.add_node(v)).collect();
        for u in 0..self.n {
            for &id in &self.out[u] {
                if self.residual(id) > 0 {
                    dg.add_edge(nodes[u], nodes[self.arcs[id].to], ());
                }
            }
        }
        let sccs = tarjan_scc(&dg);
        let k = sccs.len();
        let mut comp_of = vec![0; self.n];
        for (c, members) in sccs.iter().enumerate() {
            for &node in members {
                comp_of[dg[node]] = c;
            }
        }
        let mut succ = vec![Vec::new(); k];
        let mut pred = vec![Vec::new(); k];
        for u in 0..self.n {
            for &id in &self.out[u] {
                if self.residual(id) > 0 {
                    let (a, b) = (comp_of[u], comp_of[self.arcs[id].to]);
                    if a != b {
                        succ[a].push(b);
                        pred[b].push(a);
                    }
                }
            }
        }
        let closure = |adj: &[Vec<usize>], start: usize| {
            let mut seen = VertexSet::singleton(k, start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen
        };
        let down: Vec<VertexSet> = (0..k).map(|c| closure(&succ, c)).collect();
        let up: Vec<VertexSet> = (0..k).map(|c| closure(&pred, c)).collect();
        let (cs, ct) = (comp_of[s], comp_of[t]);
        if down[cs].contains(ct) {
            // s and t still connected in the residual network: the flow is not maximum.
            return Err(Error::Internal("flow is not maximum".into()));
        }

        let mut results = Vec::new();
        let mut stack = vec![(down[cs].clone(), up[ct].clone())];
        while let Some((inside, outside)) = stack.pop() {
            let undecided = (0..k).find(|&c| !inside.contains(c) && !outside.contains(c));
            match undecided {
                None => {
                    if results.len() == cap {
                        return Err(Error::EnumerationCap { cap });
                    }
                    let mut side = VertexSet::empty(self.n);
                    for v in 0..self.n {
                        if inside.contains(comp_of[v]) {
                            side.insert(v);
                        }
                    }
                    results.push(side);
                }
                Some(c) => {
                    stack.push((inside.clone(), outside.union(&up[c])));
                    stack.push((inside.union(&down[c]), outside));
                }
            }
        }
        Ok(results)
    }
}
