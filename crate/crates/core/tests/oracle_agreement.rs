use edgeblocks::corpus::{random_corpus, CorpusParams};
use edgeblocks::mincut::enumerate_min_separations;
use edgeblocks::oracle::{brute_blocks, brute_efficient_distinguishers, brute_lambda, brute_min_separations};
use edgeblocks::{block_hierarchy, efficient_distinguishers, fixtures, lambda, Multigraph, VertexSet, DEFAULT_ENUMERATION_CAP};

fn small_corpus() -> Vec<Multigraph> {
    let params = CorpusParams {
        max_vertices: 9,
        ..CorpusParams::default()
    };
    let mut graphs: Vec<Multigraph> = fixtures::named().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_corpus(2024, 30, params));
    graphs
}

#[test]
fn lambda_and_blocks_match_brute_force() {
    for g in small_corpus() {
        let n = g.vertex_count();
        let h = block_hierarchy(&g).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let brute = brute_lambda(&g, u, v).unwrap();
                assert_eq!(lambda(&g, u, v).unwrap(), brute, "{u},{v}");
                assert_eq!(h.lambda(u, v).unwrap(), brute, "tree {u},{v}");
            }
        }
        for k in 1..=h.max_level() + 1 {
            assert_eq!(h.k_blocks(k).unwrap(), brute_blocks(&g, k).unwrap(), "k = {k}");
        }
    }
}

#[test]
fn distinguishers_match_brute_force() {
    for g in small_corpus() {
        let h = block_hierarchy(&g).unwrap();
        for pair in h.block_pairs().unwrap() {
            let fast = efficient_distinguishers(&g, &pair, DEFAULT_ENUMERATION_CAP).unwrap();
            let brute = brute_efficient_distinguishers(&g, &pair.first, &pair.second).unwrap();
            assert_eq!(fast, brute, "{pair}");
        }
    }
}

#[test]
fn min_separation_enumeration_matches_brute_force_on_singletons() {
    for g in small_corpus().into_iter().take(25) {
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                let (s, t) = (VertexSet::singleton(n, u), VertexSet::singleton(n, v));
                // Minimum cuts whose two sides are both connected.
                let fast = enumerate_min_separations(&g, &s, &t, DEFAULT_ENUMERATION_CAP).unwrap();
                let brute = brute_min_separations(&g, &s, &t).unwrap();
                assert_eq!(fast, brute, "{u},{v}");
            }
        }
    }
}
