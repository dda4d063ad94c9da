//! Generation of cuts by a nested set of bonds, and the check that a set
//! efficiently distinguishes all edge-blocks exactly when its bonds of size
//! at most k generate every cut of size k.
//!
//! A set generates a cut `{X, Y}` when `(X, Y)` is obtained from finitely
//! many oriented members by suprema and infima. A single union `⋃ A_ℓ` is
//! not enough: on the path `0-1-2-3` the three edge bonds generate
//! `{0,2}|{1,3}` only as `(0) ∨ ((0,1,2) ∧ (2,3))`.
//!
//! The test is exact. The oriented members form a family closed under
//! complements, and `X` lies in the lattice they generate iff for every
//! `x ∈ X` the meet `M_x` of all oriented sides containing `x` stays inside
//! `X`; then `X = ⋃ M_x`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::block_hierarchy;
use crate::distinguish::{verify_nested_set, NestedSetReport};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracle::bipartitions;
use crate::separation::{sup_inf, CutSeparation, OrientedSeparation};
use crate::vertex_set::VertexSet;

/// `(X, Y)` as a supremum of infima of oriented members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationWitness {
    pub target: CutSeparation,
    pub x: VertexSet,
    /// Each term is an infimum; the witness is the supremum of the terms.
    pub terms: Vec<Vec<OrientedSeparation>>,
}

impl GenerationWitness {
    /// Folds each term through infima and the results through suprema.
    pub fn replay(&self) -> Result<OrientedSeparation> {
        let meet = |term: &[OrientedSeparation]| -> Result<OrientedSeparation> {
            let (first, rest) = term
                .split_first()
                .ok_or_else(|| Error::InvalidArgument("empty witness term".into()))?;
            rest.iter().try_fold(first.clone(), |acc, o| Ok(sup_inf(&acc, o)?.infimum))
        };
        let (first, rest) = self
            .terms
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty witness".into()))?;
        rest.iter()
            .try_fold(meet(first)?, |acc, t| Ok(sup_inf(&acc, &meet(t)?)?.supremum))
    }

    /// Whether the replay reproduces `(X, Y)` exactly.
    pub fn replays(&self) -> bool {
        self.replay()
            .is_ok_and(|o| o.a == self.x && o.b == self.x.complement())
    }

    /// Number of member orientations used.
    pub fn size(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Generation {
    Generated(GenerationWitness),
    /// Vertices of the target side whose meet spills outside it, for the
    /// orientation with fewer such vertices.
    NotGenerated { target: CutSeparation, uncovered: VertexSet },
}

impl Generation {
    pub fn is_generated(&self) -> bool {
        matches!(self, Generation::Generated(_))
    }
}

/// Whether the members of order at most `max_order` generate `target`.
pub fn is_generated(target: &CutSeparation, m: &[CutSeparation], max_order: u64) -> Generation {
    let mut sides: Vec<VertexSet> = m
        .iter()
        .filter(|s| s.order() <= max_order)
        .flat_map(|s| [s.side().clone(), s.other_side()])
        .collect();
    sides.sort();
    sides.dedup();

    let mut best: Option<VertexSet> = None;
    for x in [target.side().clone(), target.other_side()] {
        let mut terms: Vec<(VertexSet, Vec<VertexSet>)> = Vec::new();
        let mut uncovered = VertexSet::empty(x.universe());
        for v in x.iter() {
            if terms.iter().any(|(meet, _)| meet.contains(v)) {
                continue;
            }
            let containing: Vec<&VertexSet> = sides.iter().filter(|a| a.contains(v)).collect();
            // Inclusion-minimal sides give the same meet.
            let minimal: Vec<VertexSet> = containing
                .iter()
                .filter(|a| !containing.iter().any(|b| b != *a && b.is_subset(a)))
                .map(|a| (*a).clone())
                .collect();
            let meet = minimal
                .iter()
                .fold(VertexSet::full(x.universe()), |acc, a| acc.intersection(a));
            if minimal.is_empty() || !meet.is_subset(&x) {
                uncovered.insert(v);
            } else {
                terms.push((meet, minimal));
            }
        }
        if uncovered.is_empty() {
            return Generation::Generated(GenerationWitness {
                target: target.clone(),
                x,
                terms: terms
                    .into_iter()
                    .map(|(_, t)| t.into_iter().map(OrientedSeparation::from_side).collect())
                    .collect(),
            });
        }
        if best.as_ref().is_none_or(|b| uncovered < *b) {
            best = Some(uncovered);
        }
    }
    Generation::NotGenerated {
        target: target.clone(),
        uncovered: best.unwrap(),
    }
}

/// Every cut-separation of order at most `max_size`; sides need not be
/// connected.
pub fn enumerate_cuts(g: &Multigraph, max_size: u64) -> Result<Vec<CutSeparation>> {
    let mut out: Vec<CutSeparation> = bipartitions(g)?
        .filter_map(|side| {
            let order = g.cut_order(&side);
            (order <= max_size).then(|| CutSeparation::with_order(&side, order))
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub k: u64,
    pub cuts: usize,
    pub generated: usize,
    pub failures: Vec<Generation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub k_max: u64,
    pub distinguishing: NestedSetReport,
    /// Every disjoint pair of edge-blocks efficiently distinguished.
    pub efficient_distinguishing: bool,
    /// For every k up to `k_max`, the members of order at most k generate
    /// every cut of order k.
    pub generates_all_cuts: bool,
    pub levels: Vec<LevelSummary>,
    #[serde(skip)]
    pub witnesses: Vec<GenerationWitness>,
    pub witnesses_replay: bool,
    /// Both conditions agree.
    pub equivalent: bool,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.efficient_distinguishing && self.generates_all_cuts && self.witnesses_replay
    }
}

/// Largest order of a block pair plus one; 1 when there are no pairs.
pub fn default_k_max(g: &Multigraph) -> Result<u64> {
    let h = block_hierarchy(g)?;
    Ok(h.block_pairs()?.iter().map(|p| p.order).max().unwrap_or(0) + 1)
}

fn check_nested_bonds(g: &Multigraph, m: &[CutSeparation]) -> Result<()> {
    for s in m {
        if s.universe() != g.vertex_count() {
            return Err(Error::UniverseMismatch(s.universe(), g.vertex_count()));
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

/// Checks both sides of the equivalence on `g` for `m`, a nested set of
/// bonds, over cut sizes `1..=k_max`.
pub fn check_equivalence(g: &Multigraph, m: &[CutSeparation], k_max: u64) -> Result<EquivalenceReport> {
    check_nested_bonds(g, m)?;
    let cuts = enumerate_cuts(g, k_max)?;
    let distinguishing = verify_nested_set(g, m)?;

    let mut by_order: BTreeMap<u64, Vec<&CutSeparation>> = (1..=k_max).map(|k| (k, Vec::new())).collect();
    for c in &cuts {
        by_order.entry(c.order()).or_default().push(c);
    }
    let mut levels = Vec::new();
    let mut witnesses = Vec::new();
    for (k, level) in by_order.into_iter().filter(|(k, _)| *k >= 1) {
        let mut failures = Vec::new();
        let mut generated = 0;
        for c in &level {
            match is_generated(c, m, k) {
                Generation::Generated(w) => {
                    generated += 1;
                    witnesses.push(w);
                }
                failure => failures.push(failure),
            }
        }
        levels.push(LevelSummary {
            k,
            cuts: level.len(),
            generated,
            failures,
        });
    }
    let efficient_distinguishing = distinguishing.passed();
    let generates_all_cuts = levels.iter().all(|l| l.failures.is_empty());
    let witnesses_replay = witnesses.iter().all(GenerationWitness::replays);
    Ok(EquivalenceReport {
        k_max,
        distinguishing,
        efficient_distinguishing,
        generates_all_cuts,
        levels,
        witnesses,
        witnesses_replay,
        equivalent: efficient_distinguishing == generates_all_cuts,
    })
}
