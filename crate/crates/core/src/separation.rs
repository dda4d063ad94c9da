//! Cut-separations of a graph and their algebra: nestedness, corners,
//! orientations and crossing numbers.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::vertex_set::VertexSet;

/// A bipartition `{A, B}` of the vertex set.
///
/// Stored through its reference side, the side containing vertex 0, together
/// with the order of the induced cut. Equality, hashing and ordering look at
/// the reference side only.
#[derive(Clone)]
pub struct CutSeparation {
    side: VertexSet,
    order: u64,
}

impl CutSeparation {
    /// Separation with `side` as one of its sides. Either side may be given.
    pub fn new(g: &Multigraph, side: &VertexSet) -> Result<Self> {
        g.check_side(side)?;
        Ok(Self::with_order(side, g.cut_order(side)))
    }

    pub(crate) fn with_order(side: &VertexSet, order: u64) -> Self {
        let side = if side.contains(0) { side.clone() } else { side.complement() };
        CutSeparation { side, order }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(g: &Multigraph, side: I) -> Result<Self> {
        Self::new(g, &VertexSet::from_members(g.vertex_count(), side))
    }

    /// The side containing vertex 0.
    pub fn side(&self) -> &VertexSet {
        &self.side
    }

    pub fn other_side(&self) -> VertexSet {
        self.side.complement()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn universe(&self) -> usize {
        self.side.universe()
    }

    /// The side that does not contain `v`.
    pub fn side_avoiding(&self, v: usize) -> VertexSet {
        if self.side.contains(v) {
            self.other_side()
        } else {
            self.side.clone()
        }
    }

    pub fn side_containing(&self, v: usize) -> VertexSet {
        if self.side.contains(v) {
            self.side.clone()
        } else {
            self.other_side()
        }
    }

    /// Orientation with `v` on the `b` side.
    pub fn oriented_away_from(&self, v: usize) -> OrientedSeparation {
        let a = self.side_avoiding(v);
        OrientedSeparation::from_side(a)
    }

    pub fn orientations(&self) -> [OrientedSeparation; 2] {
        let o = OrientedSeparation::from_side(self.side.clone());
        [o.inverse(), o]
    }

    /// True if `x` lies within one side and `y` within the other.
    pub fn separates(&self, x: &VertexSet, y: &VertexSet) -> bool {
        let other = self.other_side();
        (x.is_subset(&self.side) && y.is_subset(&other)) || (x.is_subset(&other) && y.is_subset(&self.side))
    }

    /// Both sides induce connected subgraphs.
    pub fn is_bond(&self, g: &Multigraph) -> bool {
        g.induces_connected(&self.side) && g.induces_connected(&self.other_side())
    }

    pub fn crosses(&self, other: &CutSeparation) -> bool {
        !self.is_nested_with(other)
    }

    /// One of `A ⊆ C`, `A ⊆ D`, `B ⊆ C`, `B ⊆ D` holds.
    pub fn is_nested_with(&self, other: &CutSeparation) -> bool {
        let (a, b) = (&self.side, self.other_side());
        let (c, d) = (&other.side, other.other_side());
        a.is_subset(c) || a.is_subset(&d) || b.is_subset(c) || b.is_subset(&d)
    }

    /// Relabels vertices by `perm`; the order is unchanged.
    pub fn map(&self, perm: &[usize]) -> CutSeparation {
        Self::with_order(&self.side.map(perm), self.order)
    }
}

impl PartialEq for CutSeparation {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
    }
}

impl Eq for CutSeparation {}

impl Hash for CutSeparation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.side.hash(state);
    }
}

impl Ord for CutSeparation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.side.cmp(&other.side)
    }
}

impl PartialOrd for CutSeparation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CutSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{} (order {})", self.side, self.other_side(), self.order)
    }
}

impl fmt::Display for CutSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.side, self.other_side())
    }
}

impl Serialize for CutSeparation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CutSeparation", 2)?;
        st.serialize_field("side", &self.side)?;
        st.serialize_field("order", &self.order)?;
        st.end()
    }
}

/// Nestedness of two separations over the same vertex set. Symmetric and
/// reflexive.
pub fn nested(s1: &CutSeparation, s2: &CutSeparation) -> Result<bool> {
    if s1.universe() != s2.universe() {
        return Err(Error::UniverseMismatch(s1.universe(), s2.universe()));
    }
    Ok(s1.is_nested_with(s2))
}

/// An ordered pair `(A, B)` with `A ∪ B = V` and `A ∩ B = ∅`.
///
/// Either side may be empty; such a pair is not a valid cut-separation and
/// reports `is_valid() == false`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct OrientedSeparation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl OrientedSeparation {
    pub fn from_side(a: VertexSet) -> Self {
        let b = a.complement();
        OrientedSeparation { a, b }
    }

    pub fn inverse(&self) -> Self {
        OrientedSeparation {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// `(A, B) ≤ (C, D)` iff `A ⊆ C` and `B ⊇ D`.
    pub fn le(&self, other: &Self) -> bool {
        self.a.is_subset(&other.a) && other.b.is_subset(&self.b)
    }

    pub fn is_valid(&self) -> bool {
        !self.a.is_empty() && !self.b.is_empty()
    }

    /// `(A ∪ A', B ∩ B')`
    pub fn supremum(&self, other: &Self) -> Self {
        OrientedSeparation {
            a: self.a.union(&other.a),
            b: self.b.intersection(&other.b),
        }
    }

    /// `(A ∩ A', B ∪ B')`
    pub fn infimum(&self, other: &Self) -> Self {
        OrientedSeparation {
            a: self.a.intersection(&other.a),
            b: self.b.union(&other.b),
        }
    }

    pub fn to_separation(&self, g: &Multigraph) -> Option<CutSeparation> {
        self.is_valid().then(|| CutSeparation::with_order(&self.a, g.cut_order(&self.a)))
    }
}

/// Supremum and infimum of two oriented separations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupInf {
    pub supremum: OrientedSeparation,
    pub infimum: OrientedSeparation,
}

pub fn sup_inf(o1: &OrientedSeparation, o2: &OrientedSeparation) -> Result<SupInf> {
    if o1.a.universe() != o2.a.universe() {
        return Err(Error::UniverseMismatch(o1.a.universe(), o2.a.universe()));
    }
    Ok(SupInf {
        supremum: o1.supremum(o2),
        infimum: o1.infimum(o2),
    })
}

/// Which intersection forms the small side of a corner, with `{A, B}` the
/// first separation and `{C, D}` the second as oriented by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CornerKind {
    #[serde(rename = "A∩C")]
    AC,
    #[serde(rename = "A∩D")]
    AD,
    #[serde(rename = "B∩D")]
    BD,
    #[serde(rename = "B∩C")]
    BC,
}

impl fmt::Display for CornerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CornerKind::AC => "A∩C",
            CornerKind::AD => "A∩D",
            CornerKind::BD => "B∩D",
            CornerKind::BC => "B∩C",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub kind: CornerKind,
    /// The intersection side.
    pub small: VertexSet,
    pub separation: CutSeparation,
}

/// The corner of `(A, B)` and `(C, D)` of the given kind, if both of its
/// sides are non-empty.
pub fn oriented_corner(
    g: &Multigraph,
    first: &OrientedSeparation,
    second: &OrientedSeparation,
    kind: CornerKind,
) -> Option<Corner> {
    let (x, y) = match kind {
        CornerKind::AC => (&first.a, &second.a),
        CornerKind::AD => (&first.a, &second.b),
        CornerKind::BD => (&first.b, &second.b),
        CornerKind::BC => (&first.b, &second.a),
    };
    let small = x.intersection(y);
    if small.is_empty() || small.is_full() {
        return None;
    }
    let separation = CutSeparation::with_order(&small, g.cut_order(&small));
    Some(Corner { kind, small, separation })
}

/// All valid corners of two crossing separations, oriented by their
/// reference sides (`A` and `C` contain vertex 0).
pub fn corners(g: &Multigraph, s1: &CutSeparation, s2: &CutSeparation) -> Result<Vec<Corner>> {
    if !nested(s1, s2).map(|n| !n)? {
        return Err(Error::NotCrossing);
    }
    let first = OrientedSeparation::from_side(s1.side().clone());
    let second = OrientedSeparation::from_side(s2.side().clone());
    Ok([CornerKind::AC, CornerKind::AD, CornerKind::BD, CornerKind::BC]
        .into_iter()
        .filter_map(|kind| oriented_corner(g, &first, &second, kind))
        .collect())
}

/// Number of pool members of order `k` that cross `s`.
pub fn k_crossing_number(s: &CutSeparation, pool: &[CutSeparation], k: u64) -> usize {
    pool.iter().filter(|p| p.order() == k && p.crosses(s)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sep(g: &Multigraph, side: &[usize]) -> CutSeparation {
        CutSeparation::from_members(g, side.iter().copied()).unwrap()
    }

    fn vs(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied())
    }

    #[test]
    fn canonical_side_contains_zero() {
        let g = fixtures::c4();
        let s = sep(&g, &[2, 3]);
        assert_eq!(s.side().to_vec(), vec![0, 1]);
        assert_eq!(s, sep(&g, &[0, 1]));
        assert_eq!(s.order(), 2);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"side":[0,1],"order":2}"#);
    }

    #[test]
    fn nested_examples() {
        let g = fixtures::c4();
        let star0 = sep(&g, &[0]);
        let pair01 = sep(&g, &[0, 1]);
        let pair12 = sep(&g, &[1, 2]);
        assert!(nested(&star0, &pair01).unwrap());
        assert!(!nested(&pair01, &pair12).unwrap());
        for s in [&star0, &pair01, &pair12] {
            assert!(nested(s, s).unwrap());
        }
        let other = sep(&fixtures::k2(), &[0]);
        assert_eq!(nested(&star0, &other), Err(Error::UniverseMismatch(4, 2)));
    }

    #[test]
    fn corners_of_c4_diagonal_pair() {
        let g = fixtures::c4();
        let cs = corners(&g, &sep(&g, &[0, 1]), &sep(&g, &[1, 2])).unwrap();
        // A = {0,1}, C = {0,3} (reference side of {1,2}|{0,3}).
        let smalls: Vec<Vec<usize>> = cs.iter().map(|c| c.small.to_vec()).collect();
        assert_eq!(smalls, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(
            cs.iter().map(|c| c.kind).collect::<Vec<_>>(),
            vec![CornerKind::AC, CornerKind::AD, CornerKind::BD, CornerKind::BC]
        );
        assert!(cs.iter().all(|c| c.separation.order() == 2));
    }

    #[test]
    fn empty_corner_means_nested() {
        let g = fixtures::path(5);
        let s3 = sep(&g, &[0, 1, 2]);
        let s4 = sep(&g, &[0, 3, 4]);
        // A={0,1,2} B={3,4} C={0,3,4} D={1,2}: B∩D = ∅.
        assert!(s3.is_nested_with(&s4));
        assert_eq!(corners(&g, &s3, &s4).unwrap_err(), Error::NotCrossing);
    }

    #[test]
    fn corners_rejects_nested_inputs() {
        let g = fixtures::c4();
        assert_eq!(
            corners(&g, &sep(&g, &[0]), &sep(&g, &[0, 1])).unwrap_err(),
            Error::NotCrossing
        );
    }

    #[test]
    fn k_crossing_examples() {
        let g = fixtures::c4();
        let pool: Vec<CutSeparation> = [&[0][..], &[1], &[2], &[3], &[0, 1], &[1, 2]]
            .iter()
            .map(|s| sep(&g, s))
            .collect();
        assert_eq!(k_crossing_number(&sep(&g, &[0, 1]), &pool, 2), 1);
        assert_eq!(k_crossing_number(&sep(&g, &[0]), &pool, 2), 0);
        assert_eq!(k_crossing_number(&sep(&g, &[0, 1]), &[], 2), 0);
        assert_eq!(k_crossing_number(&sep(&g, &[0, 1]), &pool, 3), 0);
    }

    #[test]
    fn sup_inf_examples() {
        let n = 4;
        let o0 = OrientedSeparation::from_side(vs(n, &[0]));
        let o1 = OrientedSeparation::from_side(vs(n, &[1]));
        let si = sup_inf(&o0, &o1).unwrap();
        assert_eq!(si.supremum, OrientedSeparation::from_side(vs(n, &[0, 1])));
        assert!(si.supremum.is_valid());
        assert!(!si.infimum.is_valid());
        let same = sup_inf(&o0, &o0).unwrap();
        assert_eq!(same.supremum, o0);
        assert_eq!(same.infimum, o0);
    }
}
