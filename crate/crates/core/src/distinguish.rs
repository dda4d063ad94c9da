//! Efficient distinguishers of edge-block pairs, the corner-uncrossing
//! engines, and construction of a nested set of bonds that efficiently
//! distinguishes all edge-blocks.
//!
//! For a pair `i` of disjoint blocks, `𝒜_i` is the set of all bond-separations
//! of minimum order `|i|` with one block on each side. The pooled ground set
//! `𝒜` is the union of all `𝒜_i`; the k-crossing number of a separation is
//! the number of members of `𝒜` of order `k` crossing it.
//!
//! Construction runs level by level. The phase-1 core is every member of `𝒜`
//! nested with all of `𝒜`. Phase 2 walks the block pairs by ascending order.
//! A pair already served by the current set is skipped; otherwise the members
//! of `𝒜_i` nested with the whole current set are eligible and one of minimal
//! k-crossing number is taken. An eligible member always exists: every member
//! chosen so far at level `k` minimises the crossing number among the members
//! of its own family that are nested with all lower levels, so two such
//! minimisers cannot cross without a corner beating one of them. Should the
//! eligible set ever come up empty, a repair loop uncrosses a candidate
//! against its witnesses until it is nested with the current set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::{block_hierarchy, BlockPair, EdgeBlockHierarchy};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::mincut::enumerate_min_separations;
use crate::separation::{k_crossing_number, oriented_corner, CornerKind, CutSeparation, OrientedSeparation};
use crate::vertex_set::VertexSet;

/// `𝒜_i` for one pair: every efficient distinguishing bond-separation.
pub fn efficient_distinguishers(g: &Multigraph, pair: &BlockPair, cap: usize) -> Result<Vec<CutSeparation>> {
    let seps = enumerate_min_separations(g, &pair.first, &pair.second, cap)?;
    if seps.is_empty() {
        return Err(Error::Internal(format!("no efficient distinguisher for {pair}")));
    }
    for s in &seps {
        if s.order() != pair.order {
            return Err(Error::Internal(format!(
                "distinguisher {s} of {pair} has order {} instead of {}",
                s.order(),
                pair.order
            )));
        }
    }
    Ok(seps)
}

/// Membership in `𝒜_i`, decided from the definition.
pub fn is_efficient_distinguisher(g: &Multigraph, pair: &BlockPair, s: &CutSeparation) -> bool {
    s.order() == pair.order && s.separates(&pair.first, &pair.second) && s.is_bond(g)
}

/// All block pairs with their families and the pooled ground set.
#[derive(Debug, Clone)]
pub struct DistinguisherFamily {
    pairs: Vec<BlockPair>,
    /// Per pair, indices into `pool`.
    members: Vec<Vec<usize>>,
    pool: Vec<CutSeparation>,
    levels: BTreeMap<u64, Vec<CutSeparation>>,
}

impl DistinguisherFamily {
    pub fn build(g: &Multigraph, h: &EdgeBlockHierarchy, cap: usize) -> Result<Self> {
        let pairs = h.block_pairs()?;
        let families: Vec<Vec<CutSeparation>> = pairs
            .iter()
            .map(|p| efficient_distinguishers(g, p, cap))
            .collect::<Result<_>>()?;
        let mut pool: Vec<CutSeparation> = families.iter().flatten().cloned().collect();
        pool.sort();
        pool.dedup();
        let members = families
            .iter()
            .map(|f| f.iter().map(|s| pool.binary_search(s).unwrap()).collect())
            .collect();
        let mut levels: BTreeMap<u64, Vec<CutSeparation>> = BTreeMap::new();
        for s in &pool {
            levels.entry(s.order()).or_default().push(s.clone());
        }
        Ok(DistinguisherFamily { pairs, members, pool, levels })
    }

    pub fn pairs(&self) -> &[BlockPair] {
        &self.pairs
    }

    pub fn pool(&self) -> &[CutSeparation] {
        &self.pool
    }

    /// `𝒜_i` for the pair at `index`.
    pub fn family(&self, index: usize) -> impl Iterator<Item = &CutSeparation> {
        self.members[index].iter().map(|&m| &self.pool[m])
    }

    pub fn contains(&self, index: usize, s: &CutSeparation) -> bool {
        self.pool
            .binary_search(s)
            .is_ok_and(|m| self.members[index].contains(&m))
    }

    /// Members of `𝒜` of order `k`.
    pub fn level(&self, k: u64) -> &[CutSeparation] {
        self.levels.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn crossing_number(&self, s: &CutSeparation, k: u64) -> usize {
        k_crossing_number(s, self.level(k), k)
    }

    /// Pairs whose family contains `s`.
    pub fn pairs_served_by(&self, s: &CutSeparation) -> Vec<usize> {
        match self.pool.binary_search(s) {
            Ok(m) => (0..self.pairs.len()).filter(|&i| self.members[i].contains(&m)).collect(),
            Err(_) => Vec::new(),
        }
    }

    pub fn pair_index(&self, pair: &BlockPair) -> Option<usize> {
        self.pairs.binary_search(pair).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossLevelOutcome {
    pub replacement: CutSeparation,
    pub kind: CornerKind,
}

/// Replaces `high ∈ 𝒜_j` by a corner with `low` that lies in `𝒜_j` and is
/// nested with `low`, where `low` has order below `|j|`.
///
/// `A` is the side of `low` holding both blocks of `j` and `C` the side of
/// `high` holding the first block; the candidates are `{A∩C, B∪D}` and
/// `{A∩D, B∪C}`.
pub fn uncross_cross_level(
    g: &Multigraph,
    low: &CutSeparation,
    high: &CutSeparation,
    high_pair: &BlockPair,
) -> Result<CrossLevelOutcome> {
    if low.order() >= high_pair.order {
        return Err(Error::InvalidArgument(format!(
            "low separation has order {} but the pair has order {}",
            low.order(),
            high_pair.order
        )));
    }
    if low.is_nested_with(high) {
        return Err(Error::NotCrossing);
    }
    let (beta, beta2) = (&high_pair.first, &high_pair.second);
    let a = low.side_containing(beta.first().unwrap());
    if !beta.is_subset(&a) || !beta2.is_subset(&a) {
        return Err(Error::Internal(format!(
            "separation {low} of order {} splits the pair {high_pair}",
            low.order()
        )));
    }
    let c = high.side_containing(beta.first().unwrap());
    if !beta.is_subset(&c) || beta2.intersects(&c) {
        return Err(Error::InvalidArgument(format!("{high} does not separate {high_pair}")));
    }
    let first = OrientedSeparation::from_side(a);
    let second = OrientedSeparation::from_side(c);
    let mut qualified = Vec::new();
    for kind in [CornerKind::AC, CornerKind::AD] {
        let Some(corner) = oriented_corner(g, &first, &second, kind) else {
            continue;
        };
        if corner.separation.order() <= high_pair.order {
            if !is_efficient_distinguisher(g, high_pair, &corner.separation) {
                return Err(Error::Internal(format!(
                    "corner {} of order {} fails to be an efficient distinguisher of {high_pair}",
                    corner.separation,
                    corner.separation.order()
                )));
            }
            qualified.push((corner.separation, kind));
        }
    }
    let Some((replacement, kind)) = qualified.into_iter().min() else {
        return Err(Error::Internal(format!(
            "neither corner of {low} and {high} lies in the family of {high_pair}"
        )));
    };
    if !replacement.is_nested_with(low) {
        return Err(Error::Internal(format!("corner {replacement} still crosses {low}")));
    }
    Ok(CrossLevelOutcome { replacement, kind })
}

/// Which input a same-level corner replaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Replaces {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SameLevelOutcome {
    pub replacement: CutSeparation,
    pub replaces: Replaces,
    pub kind: CornerKind,
    pub crossing_before: usize,
    pub crossing_after: usize,
}

/// Every corner from the case analysis for two crossing members of the same
/// level that lies in the family of one input and has strictly smaller
/// k-crossing number than that input.
///
/// Both role assignments are tried. In each, `{C, D}` is oriented with the
/// first block of its pair in `C`, and `{A, B}` so that the two corners
/// `{A∩C, B∪D}` and `{B∩D, A∪C}` are the ones forced to order exactly `k`.
pub fn same_level_candidates(
    g: &Multigraph,
    family: &DistinguisherFamily,
    first: (&CutSeparation, &BlockPair),
    second: (&CutSeparation, &BlockPair),
) -> Result<Vec<SameLevelOutcome>> {
    let k = first.1.order;
    if second.1.order != k || first.0.order() != k || second.0.order() != k {
        return Err(Error::InvalidArgument("same-level uncrossing needs equal orders".into()));
    }
    if first.0.is_nested_with(second.0) {
        return Err(Error::NotCrossing);
    }
    let cr = [family.crossing_number(first.0, k), family.crossing_number(second.0, k)];
    let mut out: Vec<SameLevelOutcome> = Vec::new();
    let inputs = [first, second];

    for (ab, cd) in [(0usize, 1usize), (1, 0)] {
        let (s_ab, p_ab) = inputs[ab];
        let (s_cd, p_cd) = inputs[cd];
        let beta = p_cd.first.first().unwrap();
        let mut c = s_cd.side_containing(beta);
        let a = if s_ab.separates(&p_cd.first, &p_cd.second) {
            s_ab.side_containing(beta)
        } else {
            let a = s_ab.side_containing(beta);
            if !p_cd.second.is_subset(&a) {
                return Err(Error::Internal(format!("{s_ab} splits the pair {p_cd}")));
            }
            // The block of the other pair that lies in B decides the diagonal.
            let b = a.complement();
            let outer = if p_ab.first.is_subset(&b) { &p_ab.first } else { &p_ab.second };
            if outer.is_subset(&c) {
                c = c.complement();
            }
            a
        };
        let o_ab = OrientedSeparation::from_side(a);
        let o_cd = OrientedSeparation::from_side(c);
        let diagonal: Vec<_> = [CornerKind::AC, CornerKind::BD]
            .into_iter()
            .filter_map(|kind| oriented_corner(g, &o_ab, &o_cd, kind))
            .collect();
        if diagonal.len() == 2 {
            let sum = diagonal[0].separation.order() + diagonal[1].separation.order();
            if sum > 2 * k {
                return Err(Error::Internal(format!(
                    "corner orders {} + {} exceed 2k = {}",
                    diagonal[0].separation.order(),
                    diagonal[1].separation.order(),
                    2 * k
                )));
            }
        }
        for corner in diagonal {
            let crossing_after = family.crossing_number(&corner.separation, k);
            for (idx, role) in [(0usize, Replaces::First), (1, Replaces::Second)] {
                let (_, pair) = inputs[idx];
                if crossing_after < cr[idx] && is_efficient_distinguisher(g, pair, &corner.separation) {
                    out.push(SameLevelOutcome {
                        replacement: corner.separation.clone(),
                        replaces: role,
                        kind: corner.kind,
                        crossing_before: cr[idx],
                        crossing_after,
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| {
        (x.crossing_after, &x.replacement, x.replaces).cmp(&(y.crossing_after, &y.replacement, y.replaces))
    });
    out.dedup_by(|x, y| x.replacement == y.replacement && x.replaces == y.replaces);
    Ok(out)
}

/// One corner of two crossing same-level members that lies in the family of
/// one of them with strictly smaller k-crossing number than the member it
/// replaces. Prefers the smallest resulting crossing number, then the
/// canonically smallest separation.
pub fn uncross_same_level(
    g: &Multigraph,
    family: &DistinguisherFamily,
    first: (&CutSeparation, &BlockPair),
    second: (&CutSeparation, &BlockPair),
) -> Result<SameLevelOutcome> {
    same_level_candidates(g, family, first, second)?
        .into_iter()
        .next()
        .ok_or_else(|| {
            Error::Internal(format!(
                "no corner of {} and {} lowers a crossing number",
                first.0, second.0
            ))
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    CrossLevel,
    SameLevel,
}

/// Lexicographic repair potential: crossings with lower-order members of the
/// current set, then the k-crossing number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Potential {
    pub lower_crossings: usize,
    pub crossing_number: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairStep {
    pub kind: StepKind,
    pub witness: CutSeparation,
    pub corner: CornerKind,
    pub from: CutSeparation,
    pub to: CutSeparation,
    pub before: Potential,
    pub after: Potential,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    /// Nested with every member of the ground set.
    Core,
    /// Minimal k-crossing number among the eligible members of the pair's family.
    Selected { pair: BlockPair, crossing_number: usize },
    /// Produced by the repair loop from a crossing candidate.
    Repaired { pair: BlockPair, steps: Vec<RepairStep> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedMember {
    #[serde(flatten)]
    pub separation: CutSeparation,
    pub provenance: Origin,
    /// Pairs whose family contains this member.
    pub distinguishes: Vec<BlockPair>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NestedBondSet {
    members: Vec<NestedMember>,
}

impl NestedBondSet {
    pub fn members(&self) -> &[NestedMember] {
        &self.members
    }

    pub fn separations(&self) -> Vec<CutSeparation> {
        self.members.iter().map(|m| m.separation.clone()).collect()
    }

    /// Members of order less than `k`.
    pub fn below(&self, k: u64) -> Vec<CutSeparation> {
        self.members
            .iter()
            .filter(|m| m.separation.order() < k)
            .map(|m| m.separation.clone())
            .collect()
    }

    pub fn core(&self) -> Vec<CutSeparation> {
        self.members
            .iter()
            .filter(|m| m.provenance == Origin::Core)
            .map(|m| m.separation.clone())
            .collect()
    }

    pub fn repair_count(&self) -> usize {
        self.members
            .iter()
            .filter(|m| matches!(m.provenance, Origin::Repaired { .. }))
            .count()
    }

    /// Members of order at most `max_order` as repair-loop input, each with
    /// the pair it was chosen for.
    pub fn as_current(&self, max_order: u64) -> Vec<CurrentMember> {
        self.members
            .iter()
            .filter(|m| m.separation.order() <= max_order)
            .map(|m| CurrentMember {
                separation: m.separation.clone(),
                pair: match &m.provenance {
                    Origin::Core => None,
                    Origin::Selected { pair, .. } | Origin::Repaired { pair, .. } => Some(pair.clone()),
                },
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Members of the ground set nested with every member of the ground set.
pub fn phase1_core(family: &DistinguisherFamily) -> Vec<CutSeparation> {
    let pool = family.pool();
    pool.iter()
        .filter(|s| pool.iter().all(|t| s.is_nested_with(t)))
        .cloned()
        .collect()
}

/// A member of the set under construction, as seen by the repair loop.
#[derive(Debug, Clone)]
pub struct CurrentMember {
    pub separation: CutSeparation,
    /// The pair this member was chosen for, if any. Core members have none.
    pub pair: Option<BlockPair>,
}

#[derive(Debug, Clone)]
pub struct Repair {
    pub separation: CutSeparation,
    pub steps: Vec<RepairStep>,
}

/// Uncrosses `start ∈ 𝒜_i` against `current` until it is nested with every
/// member. Lower-order witnesses are handled first with cross-level corners,
/// then same-level witnesses with same-level corners that replace the
/// candidate. Each step strictly lowers the lexicographic [`Potential`].
pub fn repair_candidate(
    g: &Multigraph,
    family: &DistinguisherFamily,
    current: &[CurrentMember],
    pair: &BlockPair,
    start: CutSeparation,
) -> Result<Repair> {
    let k = pair.order;
    if !is_efficient_distinguisher(g, pair, &start) {
        return Err(Error::InvalidArgument(format!("{start} is not in the family of {pair}")));
    }
    let potential = |s: &CutSeparation| Potential {
        lower_crossings: current
            .iter()
            .filter(|m| m.separation.order() < k && m.separation.crosses(s))
            .count(),
        crossing_number: family.crossing_number(s, k),
    };
    let mut cand = start;
    let mut steps = Vec::new();
    loop {
        let mut witnesses: Vec<&CurrentMember> = current.iter().filter(|m| m.separation.crosses(&cand)).collect();
        if witnesses.is_empty() {
            return Ok(Repair { separation: cand, steps });
        }
        witnesses.sort_by(|x, y| {
            (x.separation.order(), &x.separation).cmp(&(y.separation.order(), &y.separation))
        });
        let w = witnesses[0];
        let before = potential(&cand);
        let (to, kind, step_kind) = if w.separation.order() < k {
            let out = uncross_cross_level(g, &w.separation, &cand, pair)?;
            (out.replacement, out.kind, StepKind::CrossLevel)
        } else if w.separation.order() == k {
            let w_pair = w.pair.as_ref().ok_or_else(|| {
                Error::Internal(format!("core member {} crosses {cand}", w.separation))
            })?;
            let options = same_level_candidates(g, family, (&cand, pair), (&w.separation, w_pair))?;
            let chosen = options
                .into_iter()
                .find(|o| o.replaces == Replaces::First)
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "no corner of {cand} and {} improves the candidate for {pair}",
                        w.separation
                    ))
                })?;
            (chosen.replacement, chosen.kind, StepKind::SameLevel)
        } else {
            return Err(Error::Internal(format!(
                "member {} of order {} crosses a candidate of order {k}",
                w.separation,
                w.separation.order()
            )));
        };
        let after = potential(&to);
        if after >= before {
            return Err(Error::Internal(format!(
                "repair step from {cand} to {to} did not lower the potential ({before:?} -> {after:?})"
            )));
        }
        steps.push(RepairStep {
            kind: step_kind,
            witness: w.separation.clone(),
            corner: kind,
            from: cand.clone(),
            to: to.clone(),
            before,
            after,
        });
        cand = to;
    }
}

/// Everything produced by [`build_nested_set_with`].
#[derive(Debug, Clone)]
pub struct NestedBuild {
    pub hierarchy: EdgeBlockHierarchy,
    pub family: DistinguisherFamily,
    pub nested: NestedBondSet,
}

pub fn build_nested_set(g: &Multigraph, cap: usize) -> Result<NestedBondSet> {
    Ok(build_nested_set_with(g, cap)?.nested)
}

pub fn build_nested_set_with(g: &Multigraph, cap: usize) -> Result<NestedBuild> {
    let hierarchy = block_hierarchy(g)?;
    let family = DistinguisherFamily::build(g, &hierarchy, cap)?;
    let mut current: Vec<CurrentMember> = phase1_core(&family)
        .into_iter()
        .map(|separation| CurrentMember { separation, pair: None })
        .collect();
    let mut origins: BTreeMap<CutSeparation, Origin> =
        current.iter().map(|m| (m.separation.clone(), Origin::Core)).collect();

    for (index, pair) in family.pairs().iter().enumerate() {
        if current.iter().any(|m| family.contains(index, &m.separation)) {
            continue;
        }
        let k = pair.order;
        let eligible = family
            .family(index)
            .filter(|s| current.iter().all(|m| m.separation.is_nested_with(s)))
            .map(|s| (family.crossing_number(s, k), s))
            .min();
        let (separation, origin) = match eligible {
            Some((crossing_number, s)) => (
                s.clone(),
                Origin::Selected {
                    pair: pair.clone(),
                    crossing_number,
                },
            ),
            None => {
                let start = family
                    .family(index)
                    .map(|s| {
                        let crossings = current.iter().filter(|m| m.separation.crosses(s)).count();
                        (crossings, family.crossing_number(s, k), s)
                    })
                    .min()
                    .map(|(_, _, s)| s.clone())
                    .expect("families are non-empty");
                let repair = repair_candidate(g, &family, &current, pair, start)?;
                (
                    repair.separation,
                    Origin::Repaired {
                        pair: pair.clone(),
                        steps: repair.steps,
                    },
                )
            }
        };
        origins.insert(separation.clone(), origin);
        current.push(CurrentMember {
            separation,
            pair: Some(pair.clone()),
        });
    }

    let members: Vec<NestedMember> = origins
        .into_iter()
        .map(|(separation, provenance)| {
            let distinguishes = family
                .pairs_served_by(&separation)
                .into_iter()
                .map(|i| family.pairs()[i].clone())
                .collect();
            NestedMember {
                separation,
                provenance,
                distinguishes,
            }
        })
        .collect();
    let nested = NestedBondSet { members };

    let report = verify_against(g, &hierarchy, &nested.separations());
    if !report.passed() {
        return Err(Error::Internal(format!(
            "constructed set fails verification: {}",
            serde_json::to_string(&report).unwrap_or_default()
        )));
    }
    Ok(NestedBuild {
        hierarchy,
        family,
        nested,
    })
}

/// A pair with the smallest order among the members that separate it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InefficientPair {
    pub pair: BlockPair,
    pub best_member_order: u64,
}

/// Outcome of checking a set of separations against the distinguishing
/// requirements. Each check carries its failing witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedSetReport {
    pub nested: bool,
    pub crossing_pairs: Vec<(CutSeparation, CutSeparation)>,
    pub bonds: bool,
    pub non_bonds: Vec<CutSeparation>,
    pub distinguishing: bool,
    pub undistinguished: Vec<BlockPair>,
    pub efficient: bool,
    pub inefficient: Vec<InefficientPair>,
}

impl NestedSetReport {
    pub fn passed(&self) -> bool {
        self.nested && self.bonds && self.distinguishing && self.efficient
    }
}

/// Checks that `set` is pairwise nested, consists of bonds, distinguishes
/// every pair of disjoint edge-blocks, and does so with a member of the
/// pair's order.
pub fn verify_nested_set(g: &Multigraph, set: &[CutSeparation]) -> Result<NestedSetReport> {
    let h = block_hierarchy(g)?;
    for s in set {
        if s.universe() != g.vertex_count() {
            return Err(Error::UniverseMismatch(s.universe(), g.vertex_count()));
        }
    }
    Ok(verify_against(g, &h, set))
}

pub(crate) fn verify_against(g: &Multigraph, h: &EdgeBlockHierarchy, set: &[CutSeparation]) -> NestedSetReport {
    let mut crossing_pairs = Vec::new();
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if a.crosses(b) {
                crossing_pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let non_bonds: Vec<CutSeparation> = set.iter().filter(|s| !s.is_bond(g)).cloned().collect();
    let mut undistinguished = Vec::new();
    let mut inefficient = Vec::new();
    for pair in h.block_pairs().unwrap_or_default() {
        let best = set
            .iter()
            .filter(|s| s.separates(&pair.first, &pair.second))
            .map(|s| {
                // A member's order is recounted: external inputs may carry any value.
                let side: &VertexSet = s.side();
                g.cut_order(side)
            })
            .min();
        match best {
            None => undistinguished.push(pair),
            Some(o) if o != pair.order => inefficient.push(InefficientPair {
                pair,
                best_member_order: o,
            }),
            Some(_) => {}
        }
    }
    NestedSetReport {
        nested: crossing_pairs.is_empty(),
        crossing_pairs,
        bonds: non_bonds.is_empty(),
        non_bonds,
        distinguishing: undistinguished.is_empty(),
        undistinguished,
        efficient: inefficient.is_empty(),
        inefficient,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mincut::DEFAULT_ENUMERATION_CAP as CAP;

    fn vs(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied())
    }

    fn sep(g: &Multigraph, xs: &[usize]) -> CutSeparation {
        CutSeparation::from_members(g, xs.iter().copied()).unwrap()
    }

    fn pair(g: &Multigraph, a: &[usize], b: &[usize]) -> BlockPair {
        let h = block_hierarchy(g).unwrap();
        let (a, b) = (vs(g.vertex_count(), a), vs(g.vertex_count(), b));
        h.block_pairs()
            .unwrap()
            .into_iter()
            .find(|p| (p.first == a && p.second == b) || (p.first == b && p.second == a))
            .expect("pair exists")
    }

    #[test]
    fn efficient_distinguisher_examples() {
        let c4 = fixtures::c4();
        let a = efficient_distinguishers(&c4, &pair(&c4, &[0], &[2]), CAP).unwrap();
        assert_eq!(a.len(), 4);

        let b = fixtures::bowtie();
        let a = efficient_distinguishers(&b, &pair(&b, &[0, 1, 2], &[3, 4, 5]), CAP).unwrap();
        assert_eq!(a, vec![sep(&b, &[0, 1, 2])]);

        let ex1 = fixtures::ex1();
        let p = pair(&ex1.graph, &ex1.copies[0].to_vec(), &ex1.copies[1].to_vec());
        let a = efficient_distinguishers(&ex1.graph, &p, CAP).unwrap();
        let mut expect = vec![
            CutSeparation::new(&ex1.graph, &ex1.copies[0]).unwrap(),
            CutSeparation::new(&ex1.graph, &ex1.copies[1]).unwrap(),
        ];
        expect.sort();
        assert_eq!(a, expect);
    }

    #[test]
    fn c4_same_level_uncrossing() {
        let c4 = fixtures::c4();
        let h = block_hierarchy(&c4).unwrap();
        let family = DistinguisherFamily::build(&c4, &h, CAP).unwrap();
        assert_eq!(family.pool().len(), 6);
        let (ai, pi) = (sep(&c4, &[0, 1]), pair(&c4, &[0], &[2]));
        let (aj, pj) = (sep(&c4, &[1, 2]), pair(&c4, &[1], &[3]));
        assert_eq!(family.crossing_number(&ai, 2), 1);

        let all = same_level_candidates(&c4, &family, (&ai, &pi), (&aj, &pj)).unwrap();
        // Every corner is a star with crossing number 0; each lies in the
        // family of whichever input's pair it separates.
        assert!(all.iter().all(|o| o.crossing_after == 0 && o.crossing_before == 1));
        assert!(all
            .iter()
            .any(|o| o.replacement == sep(&c4, &[1]) && o.replaces == Replaces::Second));
        for o in &all {
            let (idx, p) = match o.replaces {
                Replaces::First => (family.pair_index(&pi).unwrap(), &pi),
                Replaces::Second => (family.pair_index(&pj).unwrap(), &pj),
            };
            assert!(family.contains(idx, &o.replacement), "{} for {p}", o.replacement);
        }

        // Ties at crossing number 0 go to the canonically smallest separation.
        let out = uncross_same_level(&c4, &family, (&ai, &pi), (&aj, &pj)).unwrap();
        assert_eq!(out.replacement, sep(&c4, &[0]));
        assert_eq!(out.replaces, Replaces::First);

        let swapped = uncross_same_level(&c4, &family, (&aj, &pj), (&ai, &pi)).unwrap();
        assert_eq!(swapped.replacement, sep(&c4, &[0]));
        assert_eq!(swapped.replaces, Replaces::Second);

        let star = sep(&c4, &[0]);
        assert_eq!(
            uncross_same_level(&c4, &family, (&star, &pi), (&aj, &pj)).unwrap_err(),
            Error::NotCrossing
        );
    }

    #[test]
    fn cross_level_rejects_nested_inputs() {
        let g = fixtures::c4_pendant();
        let p_low = pair(&g, &[4], &[2]);
        assert_eq!(p_low.order, 1);
        let low = sep(&g, &[4]);
        let p_high = pair(&g, &[0], &[2]);
        let high = sep(&g, &[0, 1, 4]);
        assert!(low.is_nested_with(&high));
        assert_eq!(uncross_cross_level(&g, &low, &high, &p_high).unwrap_err(), Error::NotCrossing);
    }

    #[test]
    fn cross_level_corners_on_seeded_corpus() {
        let mut seen = 0;
        for g in crate::corpus::random_corpus(11, 40, crate::corpus::CorpusParams::default()) {
            let h = block_hierarchy(&g).unwrap();
            let family = DistinguisherFamily::build(&g, &h, CAP).unwrap();
            for (j, pj) in family.pairs().iter().enumerate() {
                for high in family.family(j) {
                    for low in family.pool().iter().filter(|s| s.order() < pj.order && s.crosses(high)) {
                        let out = uncross_cross_level(&g, low, high, pj).unwrap();
                        assert!(is_efficient_distinguisher(&g, pj, &out.replacement));
                        assert!(out.replacement.is_nested_with(low));
                        assert!(matches!(out.kind, CornerKind::AC | CornerKind::AD));
                        seen += 1;
                    }
                }
            }
        }
        assert!(seen > 0, "corpus exercised no cross-level crossing");
    }

    #[test]
    fn c4_pendant_low_pair_never_crosses() {
        let g = fixtures::c4_pendant();
        let built = build_nested_set_with(&g, CAP).unwrap();
        let low = sep(&g, &[4]);
        assert!(built.nested.separations().contains(&low));
        for s in built.family.level(2) {
            assert!(low.is_nested_with(s));
        }
    }

    #[test]
    fn build_c4_gives_stars() {
        let c4 = fixtures::c4();
        let built = build_nested_set_with(&c4, CAP).unwrap();
        let expect: Vec<CutSeparation> = (0..4).map(|v| sep(&c4, &[v])).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        assert_eq!(built.nested.separations(), expect);
        assert!(built.nested.members().iter().all(|m| m.provenance == Origin::Core));
    }

    #[test]
    fn build_ex1_below_three() {
        let ex1 = fixtures::ex1();
        let n = build_nested_set(&ex1.graph, CAP).unwrap();
        let mut f: Vec<CutSeparation> = ex1
            .copies
            .iter()
            .map(|c| CutSeparation::new(&ex1.graph, c).unwrap())
            .collect();
        f.sort();
        assert_eq!(n.below(3), f);
    }

    #[test]
    fn build_bowtie_contains_bridge() {
        let b = fixtures::bowtie();
        let n = build_nested_set(&b, CAP).unwrap();
        assert!(n.separations().contains(&sep(&b, &[0, 1, 2])));
        assert!(n.separations().iter().filter(|s| s.order() == 2).count() >= 4);
        assert!(verify_nested_set(&b, &n.separations()).unwrap().passed());
    }

    #[test]
    fn verify_catches_each_failure() {
        let c4 = fixtures::c4();
        let stars: Vec<_> = (0..4).map(|v| sep(&c4, &[v])).collect();
        assert!(verify_nested_set(&c4, &stars).unwrap().passed());

        let k2 = fixtures::k2();
        let r = verify_nested_set(&k2, &[]).unwrap();
        assert!(r.nested && r.bonds && !r.distinguishing);
        assert_eq!(r.undistinguished, vec![pair(&k2, &[0], &[1])]);

        let crossing = [sep(&c4, &[0, 1]), sep(&c4, &[1, 2])];
        let r = verify_nested_set(&c4, &crossing).unwrap();
        assert!(!r.nested);
        assert_eq!(r.crossing_pairs.len(), 1);

        let b = fixtures::bowtie();
        let r = verify_nested_set(&b, &[sep(&b, &[0, 4])]).unwrap();
        assert!(!r.bonds);
    }

    #[test]
    fn verify_catches_inefficiency_on_ex1() {
        let ex1 = fixtures::ex1();
        let g = &ex1.graph;
        // F1, F2, F3, the stars of every non-hub vertex except a1 = 1, and the
        // order-4 bond {a1,b1}|rest. The hub star is no bond: removing v1
        // strands the rest of its copy.
        let mut set: Vec<CutSeparation> = ex1.copies.iter().map(|c| CutSeparation::new(g, c).unwrap()).collect();
        for v in (0..12).filter(|v| v % 4 != 0 && *v != 1) {
            set.push(sep(g, &[v]));
        }
        set.push(sep(g, &[1, 2]));
        let r = verify_nested_set(g, &set).unwrap();
        assert!(!sep(g, &[0]).is_bond(g));
        assert!(r.nested && r.bonds && r.distinguishing);
        assert!(!r.efficient);
        let witness = r
            .inefficient
            .iter()
            .find(|w| w.pair.first == vs(12, &[0]) && w.pair.second == vs(12, &[1]))
            .expect("({v1},{a1}) is only separated by {a1,b1}|rest");
        assert_eq!(witness.pair.order, 3);
        assert_eq!(witness.best_member_order, 4);
    }

    #[test]
    fn repair_from_crossing_start_reaches_nested_member() {
        // C4: current set holds the star of 1 chosen for ({1},{3}); start from
        // {0,1}|{2,3} for ({0},{2}) which crosses nothing there, then from a
        // start crossing {1,2}|{0,3}.
        let c4 = fixtures::c4();
        let h = block_hierarchy(&c4).unwrap();
        let family = DistinguisherFamily::build(&c4, &h, CAP).unwrap();
        let pj = pair(&c4, &[1], &[3]);
        let current = vec![CurrentMember {
            separation: sep(&c4, &[1, 2]),
            pair: Some(pj),
        }];
        let pi = pair(&c4, &[0], &[2]);
        let r = repair_candidate(&c4, &family, &current, &pi, sep(&c4, &[0, 1])).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert_eq!(r.steps[0].kind, StepKind::SameLevel);
        assert!(r.steps[0].after < r.steps[0].before);
        assert!(r.separation.is_nested_with(&sep(&c4, &[1, 2])));
        assert!(is_efficient_distinguisher(&c4, &pi, &r.separation));
    }
}
