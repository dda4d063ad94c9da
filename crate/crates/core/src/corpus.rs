//! Seeded random connected multigraphs for property and acceptance suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy)]
pub struct CorpusParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Upper bound on the sum of all multiplicities.
    pub max_total_multiplicity: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            min_vertices: 2,
            max_vertices: 10,
            max_total_multiplicity: 30,
        }
    }
}

/// One random connected multigraph.
///
/// A random spanning tree guarantees connectivity; the remaining budget is
/// spent on extra edges whose count is drawn from a density chosen per graph,
/// so the corpus mixes trees, sparse graphs and dense multigraphs.
pub fn random_connected(rng: &mut impl Rng, params: CorpusParams) -> Multigraph {
    let n = rng.random_range(params.min_vertices..=params.max_vertices);
    let mut g = Multigraph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        g.add_edge(order[i], parent, 1).unwrap();
    }
    let tree_edges = n.saturating_sub(1) as u64;
    let budget = params.max_total_multiplicity.saturating_sub(tree_edges);
    let density: f64 = [0.0, 0.2, 0.5, 1.0][rng.random_range(0..4)];
    let extra = ((budget as f64) * density * rng.random::<f64>()).round() as u64;
    let mut spent = 0;
    while spent < extra && n >= 2 {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let m = rng.random_range(1..=3).min(extra - spent);
        g.add_edge(u, v, m).unwrap();
        spent += m;
    }
    g
}

/// `count` graphs from a fixed seed.
pub fn random_corpus(seed: u64, count: usize, params: CorpusParams) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_connected(&mut rng, params)).collect()
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
