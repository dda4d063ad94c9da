//! The laminar hierarchy of k-edge-blocks for all k at once.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::mincut::{gomory_hu, GomoryHuTree};
use crate::vertex_set::VertexSet;

/// Upper end of a block's validity interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Finite(u64),
    /// Singletons stay blocks for every larger k.
    Unbounded,
}

impl Level {
    pub fn admits(self, k: u64) -> bool {
        match self {
            Level::Finite(hi) => k <= hi,
            Level::Unbounded => true,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(k) => write!(f, "{k}"),
            Level::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Level::Finite(k) => serializer.serialize_u64(*k),
            Level::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

/// A vertex set that is a k-edge-block exactly for `k_lo <= k <= k_hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub set: VertexSet,
    pub k_lo: u64,
    pub k_hi: Level,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct EdgeBlockHierarchy {
    blocks: Vec<Block>,
    tree: GomoryHuTree,
}

/// Two disjoint blocks and the order of every efficient separation of them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockPair {
    pub order: u64,
    pub first: VertexSet,
    pub second: VertexSet,
}

impl Serialize for BlockPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BlockPair", 3)?;
        st.serialize_field("blocks", &[&self.first, &self.second])?;
        st.serialize_field("order", &self.order)?;
        st.end()
    }
}

impl fmt::Display for BlockPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) order {}", self.first, self.second, self.order)
    }
}

impl BlockPair {
    pub fn map(&self, perm: &[usize]) -> BlockPair {
        let (a, b) = (self.first.map(perm), self.second.map(perm));
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        BlockPair { order: self.order, first, second }
    }
}

/// Thresholds the Gomory–Hu tree: the k-edge-blocks are the classes joined
/// by tree edges of weight at least k.
pub fn block_hierarchy(g: &Multigraph) -> Result<EdgeBlockHierarchy> {
    let tree = gomory_hu(g)?;
    let mut blocks: Vec<Block> = Vec::new();
    let mut pending = vec![(VertexSet::full(g.vertex_count()), 1u64, None::<usize>)];
    while let Some((set, k_lo, parent)) = pending.pop() {
        let id = blocks.len();
        let k_hi = match tree.min_weight_within(&set) {
            Some(w) => Level::Finite(w),
            None => Level::Unbounded,
        };
        if let Some(p) = parent {
            blocks[p].children.push(id);
        }
        if let Level::Finite(w) = k_hi {
            let children = tree.classes_at_least(&set, w + 1);
            for child in children.into_iter().rev() {
                pending.push((child, w + 1, Some(id)));
            }
        }
        blocks.push(Block { set, k_lo, k_hi, parent, children: Vec::new() });
    }
    let h = EdgeBlockHierarchy { blocks, tree };
    h.check_laminar()?;
    Ok(h)
}

impl EdgeBlockHierarchy {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn root(&self) -> &Block {
        &self.blocks[0]
    }

    pub fn tree(&self) -> &GomoryHuTree {
        &self.tree
    }

    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }

    /// `λ(u, v)` from the cached Gomory–Hu tree.
    pub fn lambda(&self, u: usize, v: usize) -> Result<u64> {
        self.tree.lambda(u, v)
    }

    /// One more than the largest finite `k_hi`: from this level on every
    /// block is a singleton.
    pub fn max_level(&self) -> u64 {
        self.blocks
            .iter()
            .filter_map(|b| match b.k_hi {
                Level::Finite(k) => Some(k + 1),
                Level::Unbounded => None,
            })
            .max()
            .unwrap_or(1)
    }

    /// The k-edge-blocks, in canonical order.
    pub fn k_blocks(&self, k: u64) -> Result<Vec<VertexSet>> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        let mut out: Vec<VertexSet> = self
            .blocks
            .iter()
            .filter(|b| b.k_lo <= k && b.k_hi.admits(k))
            .map(|b| b.set.clone())
            .collect();
        out.sort();
        Ok(out)
    }

    fn check_laminar(&self) -> Result<()> {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                let ok = a.set.is_disjoint(&b.set) || a.set.is_subset(&b.set) || b.set.is_subset(&a.set);
                if !ok {
                    return Err(Error::Internal(format!("blocks {} and {} overlap", a.set, b.set)));
                }
            }
        }
        Ok(())
    }

    /// All unordered pairs of disjoint blocks with their pair order, sorted by
    /// order and then canonically.
    pub fn block_pairs(&self) -> Result<Vec<BlockPair>> {
        let mut pairs = Vec::new();
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if a.set.is_disjoint(&b.set) {
                    pairs.push(self.make_pair(&a.set, &b.set)?);
                }
            }
        }
        pairs.sort();
        Ok(pairs)
    }

    /// Pairs whose order is exactly `k`.
    pub fn pairs_of_order(&self, k: u64) -> Result<Vec<BlockPair>> {
        Ok(self.block_pairs()?.into_iter().filter(|p| p.order == k).collect())
    }

    fn make_pair(&self, a: &VertexSet, b: &VertexSet) -> Result<BlockPair> {
        let (first, second) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        let (u, v) = (first.first().unwrap(), second.first().unwrap());
        let order = self.tree.lambda(u, v)?;
        // Spot-check constancy on the extreme members of each block.
        let ends = |s: &VertexSet| [s.first().unwrap(), s.iter().last().unwrap()];
        for x in ends(&first) {
            for y in ends(&second) {
                let l = self.tree.lambda(x, y)?;
                if l != order {
                    return Err(Error::Internal(format!(
                        "pair order not constant across {first} x {second}: {order} vs {l}"
                    )));
                }
            }
        }
        Ok(BlockPair { order, first, second })
    }

    fn node_json(&self, id: usize) -> serde_json::Value {
        let b = &self.blocks[id];
        let mut children: Vec<usize> = b.children.clone();
        children.sort_by(|&x, &y| self.blocks[x].set.cmp(&self.blocks[y].set));
        serde_json::json!({
            "set": b.set,
            "k_lo": b.k_lo,
            "k_hi": b.k_hi,
            "children": children.into_iter().map(|c| self.node_json(c)).collect::<Vec<_>>(),
        })
    }

    /// Nested `{"set", "k_lo", "k_hi", "children"}` objects from the root.
    pub fn to_json(&self) -> serde_json::Value {
        self.node_json(0)
    }
}
