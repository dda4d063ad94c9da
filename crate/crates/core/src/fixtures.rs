//! Small named graphs used throughout the tests and the documentation.

use crate::graph::Multigraph;
use crate::vertex_set::VertexSet;

/// Three disjoint copies of K4 whose selected vertices form a triangle.
///
/// Copy `i` occupies vertices `4i..4i+4`; its hub is `4i`.
#[derive(Debug, Clone)]
pub struct Ex1 {
    pub graph: Multigraph,
    pub copies: [VertexSet; 3],
    pub hubs: [usize; 3],
}

pub fn ex1() -> Ex1 {
    let mut g = Multigraph::new(12);
    for copy in 0..3 {
        let base = 4 * copy;
        for a in 0..4 {
            for b in a + 1..4 {
                g.add_edge(base + a, base + b, 1).unwrap();
            }
        }
        let names = ["v", "a", "b", "c"];
        for (offset, name) in names.iter().enumerate() {
            g.set_label(base + offset, format!("{name}{}", copy + 1)).unwrap();
        }
    }
    g.add_edge(0, 4, 1).unwrap();
    g.add_edge(4, 8, 1).unwrap();
    g.add_edge(0, 8, 1).unwrap();
    let copy = |i: usize| VertexSet::from_members(12, 4 * i..4 * i + 4);
    Ex1 {
        graph: g,
        copies: [copy(0), copy(1), copy(2)],
        hubs: [0, 4, 8],
    }
}

/// A single edge.
pub fn k2() -> Multigraph {
    Multigraph::from_edges(2, [(0, 1, 1)]).unwrap()
}

/// The 4-cycle `0-1-2-3-0`.
pub fn c4() -> Multigraph {
    Multigraph::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap()
}

pub fn k4() -> Multigraph {
    complete(4)
}

pub fn complete(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b, 1).unwrap();
        }
    }
    g
}

/// Triangles `{0,1,2}` and `{3,4,5}` joined by the bridge `0-3`.
pub fn bowtie() -> Multigraph {
    Multigraph::from_edges(
        6,
        [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1), (0, 3, 1)],
    )
    .unwrap()
}

/// C4 with a pendant vertex 4 attached to vertex 0.
pub fn c4_pendant() -> Multigraph {
    let mut g = Multigraph::new(5);
    for e in c4().edges() {
        g.add_edge(e.u, e.v, e.multiplicity).unwrap();
    }
    g.add_edge(4, 0, 1).unwrap();
    g
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (1..n).map(|v| (v - 1, v, 1))).unwrap()
}

/// All named fixtures with a short name.
pub fn named() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("ex1", ex1().graph),
        ("k2", k2()),
        ("c4", c4()),
        ("k4", k4()),
        ("bowtie", bowtie()),
        ("c4-pendant", c4_pendant()),
    ]
}
