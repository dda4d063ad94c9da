//! Brute-force reference implementations over all vertex bipartitions.
//!
//! Nothing here touches the flow code; these functions exist to check it.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::separation::CutSeparation;
use crate::vertex_set::VertexSet;

/// Largest vertex count the oracles accept.
pub const ORACLE_LIMIT: usize = 16;

fn guard(g: &Multigraph) -> Result<()> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::GuardExceeded { n, limit: ORACLE_LIMIT });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Every proper bipartition once, as its side containing vertex 0.
pub fn bipartitions(g: &Multigraph) -> Result<impl Iterator<Item = VertexSet>> {
    guard(g)?;
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    Ok((0..(1u64 << (n - 1)))
        .map(move |m| (m << 1) | 1)
        .filter(move |&m| m != full)
        .map(move |m| VertexSet::from_mask(n, m)))
}

fn separated(side: &VertexSet, x: &VertexSet, y: &VertexSet) -> bool {
    let other = side.complement();
    (x.is_subset(side) && y.is_subset(&other)) || (y.is_subset(side) && x.is_subset(&other))
}

/// Minimum cut order over all bipartitions separating `u` from `v`.
pub fn brute_lambda(g: &Multigraph, u: usize, v: usize) -> Result<u64> {
    guard(g)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let n = g.vertex_count();
    let (su, sv) = (VertexSet::singleton(n, u), VertexSet::singleton(n, v));
    Ok(bipartitions(g)?
        .filter(|side| separated(side, &su, &sv))
        .map(|side| g.cut_order(&side))
        .min()
        .expect("u != v admits a bipartition"))
}

/// Classes of the relation `λ(u, v) ≥ k`, in canonical order.
///
/// Transitivity of the relation is checked, not assumed.
pub fn brute_blocks(g: &Multigraph, k: u64) -> Result<Vec<VertexSet>> {
    guard(g)?;
    let n = g.vertex_count();
    let mut related = vec![vec![true; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let r = brute_lambda(g, u, v)? >= k;
            related[u][v] = r;
            related[v][u] = r;
        }
    }
    let mut assigned = VertexSet::empty(n);
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned.contains(u) {
            continue;
        }
        let class = VertexSet::from_members(n, (0..n).filter(|&v| related[u][v]));
        for a in class.iter() {
            for b in class.iter() {
                if !related[a][b] {
                    return Err(Error::Internal(format!(
                        "inseparability at k = {k} is not transitive: {u}~{a}, {u}~{b} but not {a}~{b}"
                    )));
                }
            }
        }
        assigned.union_with(&class);
        classes.push(class);
    }
    classes.sort();
    Ok(classes)
}

/// Bond-separations with `x` on one side, `y` on the other, and minimum order
/// among all such bonds.
pub fn brute_efficient_distinguishers(
    g: &Multigraph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Vec<CutSeparation>> {
    guard(g)?;
    if let Some(v) = x.intersection(y).first() {
        return Err(Error::OverlappingTerminals(v));
    }
    let bonds: Vec<(VertexSet, u64)> = bipartitions(g)?
        .filter(|side| separated(side, x, y))
        .filter(|side| g.induces_connected(side) && g.induces_connected(&side.complement()))
        .map(|side| {
            let order = g.cut_order(&side);
            (side, order)
        })
        .collect();
    let Some(best) = bonds.iter().map(|(_, o)| *o).min() else {
        return Ok(Vec::new());
    };
    let mut out: Vec<CutSeparation> = bonds
        .into_iter()
        .filter(|(_, o)| *o == best)
        .map(|(side, o)| CutSeparation::with_order(&side, o))
        .collect();
    out.sort();
    Ok(out)
}

/// Separations with `s` on one side and `t` on the other whose order equals
/// the minimum over all such cuts and whose sides are connected.
pub fn brute_min_separations(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<Vec<CutSeparation>> {
    guard(g)?;
    let cuts: Vec<(VertexSet, u64)> = bipartitions(g)?
        .filter(|side| separated(side, s, t))
        .map(|side| {
            let order = g.cut_order(&side);
            (side, order)
        })
        .collect();
    let Some(best) = cuts.iter().map(|(_, o)| *o).min() else {
        return Ok(Vec::new());
    };
    let mut out: Vec<CutSeparation> = cuts
        .into_iter()
        .filter(|(side, o)| {
            *o == best && g.induces_connected(side) && g.induces_connected(&side.complement())
        })
        .map(|(side, o)| CutSeparation::with_order(&side, o))
        .collect();
    out.sort();
    Ok(out)
}
