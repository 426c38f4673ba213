use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::poset::Poset;
use crate::sets::BitSet;

/// A finite lattice: a poset plus precomputed meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Which forbidden five-element lattice was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenKind {
    M3,
    N5,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenKind::M3 => f.write_str("M3"),
            ForbiddenKind::N5 => f.write_str("N5"),
        }
    }
}

/// A sublattice isomorphic to M3 or N5.
///
/// Elements are listed by role: for N5 `[bottom, a, c, b, top]` with
/// `a < c` and `b` incomparable to both; for M3 `[bottom, a, b, c, top]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenSublattice {
    pub kind: ForbiddenKind,
    pub elements: [usize; 5],
}

impl ForbiddenSublattice {
    pub fn sorted_elements(&self) -> [usize; 5] {
        let mut e = self.elements;
        e.sort_unstable();
        e
    }

    pub fn describe(&self, lattice: &Lattice) -> String {
        let labels: Vec<&str> = self.elements.iter().map(|&i| lattice.label(i)).collect();
        format!("{} sublattice [{}]", self.kind, labels.join(", "))
    }
}

fn extremum(rows: &[BitSet], lookup: &HashMap<BitSet, usize>, a: usize, b: usize) -> Option<usize> {
    let mut common = rows[a].clone();
    common.intersect_with(&rows[b]);
    lookup.get(&common).copied()
}

impl Lattice {
    /// Checks that every pair has a meet and a join and precomputes both
    /// operation tables.
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        // a ∧ b exists iff ↓a ∩ ↓b is itself a principal down-set.
        let downs: Vec<BitSet> = (0..n).map(|i| poset.down_set(i).clone()).collect();
        let ups: Vec<BitSet> = (0..n).map(|i| poset.up_set(i).clone()).collect();
        let down_index: HashMap<BitSet, usize> =
            downs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let up_index: HashMap<BitSet, usize> =
            ups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = extremum(&downs, &down_index, a, b).ok_or_else(|| {
                    Error::NotALattice(poset.label(a).into(), poset.label(b).into(), "meet")
                })?;
                let j = extremum(&ups, &up_index, a, b).ok_or_else(|| {
                    Error::NotALattice(poset.label(a).into(), poset.label(b).into(), "join")
                })?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let bottom = (1..n).fold(0, |acc, i| meet[acc * n + i]);
        let top = (1..n).fold(0, |acc, i| join[acc * n + i]);
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Wraps tables that are already known to be the meet and join of
    /// `poset`.
    pub(crate) fn from_tables(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Self {
        let n = poset.len();
        debug_assert!(n > 0 && meet.len() == n * n && join.len() == n * n);
        let bottom = (1..n).fold(0, |acc, i| meet[acc * n + i]);
        let top = (1..n).fold(0, |acc, i| join[acc * n + i]);
        Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn from_str_covers(labels: &[&str], covers: &[(&str, &str)]) -> Result<Self> {
        Self::from_poset(Poset::from_str_pairs(labels, covers)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// Meet of a set of elements; the empty meet is the top.
    pub fn meet_all(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a set of elements; the empty join is the bottom.
    pub fn join_all(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    /// Elements with exactly one lower cover. The bottom has none, so it
    /// is never join-irreducible.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.poset.lower_covers(i).len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover; never the top.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.poset.upper_covers(i).len() == 1)
            .collect()
    }

    /// Same carrier, reversed order, meet and join swapped.
    pub fn dual(&self) -> Lattice {
        Lattice {
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (y..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// Every N5 sublattice, as role-ordered witnesses, sorted by their
    /// sorted element indices.
    pub fn n5_sublattices(&self) -> Vec<ForbiddenSublattice> {
        let n = self.len();
        let mut found = Vec::new();
        for a in 0..n {
            for c in 0..n {
                if !self.poset.lt(a, c) {
                    continue;
                }
                for b in 0..n {
                    if self.poset.comparable(a, b) || self.poset.comparable(c, b) {
                        continue;
                    }
                    let bottom = self.meet(a, b);
                    let top = self.join(a, b);
                    if self.meet(c, b) == bottom && self.join(c, b) == top {
                        found.push(ForbiddenSublattice {
                            kind: ForbiddenKind::N5,
                            elements: [bottom, a, c, b, top],
                        });
                    }
                }
            }
        }
        found.sort_by_key(|w| (w.sorted_elements(), w.elements));
        found
    }

    /// Every M3 sublattice, one witness per element set.
    pub fn m3_sublattices(&self) -> Vec<ForbiddenSublattice> {
        let n = self.len();
        let mut found = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if self.poset.comparable(a, b) {
                    continue;
                }
                let bottom = self.meet(a, b);
                let top = self.join(a, b);
                for c in (b + 1)..n {
                    if self.poset.comparable(a, c) || self.poset.comparable(b, c) {
                        continue;
                    }
                    if self.meet(a, c) == bottom
                        && self.meet(b, c) == bottom
                        && self.join(a, c) == top
                        && self.join(b, c) == top
                    {
                        found.push(ForbiddenSublattice {
                            kind: ForbiddenKind::M3,
                            elements: [bottom, a, b, c, top],
                        });
                    }
                }
            }
        }
        found.sort_by_key(|w| (w.sorted_elements(), w.elements));
        found
    }

    /// The lexicographically first N5 sublattice if any, else the first M3.
    /// `None` exactly when the lattice is distributive.
    pub fn find_forbidden_sublattice(&self) -> Option<ForbiddenSublattice> {
        self.n5_sublattices()
            .into_iter()
            .next()
            .or_else(|| self.m3_sublattices().into_iter().next())
    }

    /// Number of distinct element sets forming an N5 sublattice.
    pub fn count_n5_sublattices(&self) -> usize {
        let mut sets: Vec<[usize; 5]> = self
            .n5_sublattices()
            .iter()
            .map(ForbiddenSublattice::sorted_elements)
            .collect();
        sets.sort_unstable();
        sets.dedup();
        sets.len()
    }

    /// Whether `set` is closed under binary meet and join.
    pub fn is_sublattice(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.iter().all(|&a| {
                set.iter()
                    .all(|&b| set.contains(&self.meet(a, b)) && set.contains(&self.join(a, b)))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn m3_is_a_five_element_lattice() {
        let m3 = catalog::m3();
        assert_eq!(m3.len(), 5);
        assert_eq!(m3.label(m3.bottom()), "0");
        assert_eq!(m3.label(m3.top()), "1");
    }

    #[test]
    fn antichain_of_two_is_not_a_lattice() {
        let p = Poset::from_str_pairs(&["a", "b"], &[]).unwrap();
        assert_eq!(
            Lattice::from_poset(p).unwrap_err(),
            Error::NotALattice("a".into(), "b".into(), "meet")
        );
    }

    #[test]
    fn empty_poset_is_rejected_and_singleton_accepted() {
        let p = Poset::from_str_pairs(&[], &[]).unwrap();
        assert_eq!(Lattice::from_poset(p).unwrap_err(), Error::EmptyLattice);
        let one = Lattice::from_str_covers(&["x"], &[]).unwrap();
        assert_eq!(one.top(), one.bottom());
        assert!(one.join_irreducibles().is_empty());
        assert!(one.meet_irreducibles().is_empty());
        assert!(one.is_distributive());
    }

    #[test]
    fn chain_meet_is_min_join_is_max() {
        let c = catalog::chain(5);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(c.meet(a, b), a.min(b));
                assert_eq!(c.join(a, b), a.max(b));
            }
        }
    }

    #[test]
    fn irreducibles_of_m3_n5_b3() {
        let m3 = catalog::m3();
        let atoms: Vec<usize> = ["a", "b", "c"].iter().map(|l| m3.index_of(l).unwrap()).collect();
        assert_eq!(m3.join_irreducibles(), atoms);
        assert_eq!(m3.meet_irreducibles(), atoms);

        let n5 = catalog::n5();
        let abc: Vec<usize> = ["a", "b", "c"].iter().map(|l| n5.index_of(l).unwrap()).collect();
        assert_eq!(n5.join_irreducibles(), abc);
        assert_eq!(n5.meet_irreducibles(), abc);

        let b3 = catalog::boolean(3);
        let mut coatoms: Vec<&str> = b3.meet_irreducibles().iter().map(|&i| b3.label(i)).collect();
        coatoms.sort_unstable();
        assert_eq!(coatoms, vec!["{a, b}", "{a, c}", "{b, c}"]);
    }

    #[test]
    fn irreducibles_match_subset_join_definition() {
        // x ∈ J(L) iff x is not the join of the elements strictly below it
        for l in catalog::all_lattices(7) {
            let brute: Vec<usize> = (0..l.len())
                .filter(|&x| {
                    let below = (0..l.len()).filter(|&y| l.poset().lt(y, x));
                    l.join_all(below) != x
                })
                .collect();
            assert_eq!(l.join_irreducibles(), brute);
        }
    }

    #[test]
    fn distributivity_of_small_examples() {
        assert!(!catalog::m3().is_distributive());
        assert!(!catalog::n5().is_distributive());
        assert!(catalog::chain(6).is_distributive());
        assert!(catalog::boolean(3).is_distributive());
    }

    #[test]
    fn forbidden_sublattices() {
        let m3 = catalog::m3();
        let w = m3.find_forbidden_sublattice().unwrap();
        assert_eq!(w.kind, ForbiddenKind::M3);
        assert_eq!(w.sorted_elements(), [0, 1, 2, 3, 4]);
        assert!(m3.is_sublattice(&w.elements));

        let n5 = catalog::n5();
        let w = n5.find_forbidden_sublattice().unwrap();
        assert_eq!(w.kind, ForbiddenKind::N5);
        assert_eq!(w.describe(&n5), "N5 sublattice [0, a, c, b, 1]");

        assert!(catalog::boolean(3).find_forbidden_sublattice().is_none());
    }

    #[test]
    fn dual_is_an_involution_and_swaps_irreducibles() {
        let n5 = catalog::n5();
        let d = n5.dual();
        assert_eq!(d.dual(), n5);
        assert_eq!(d.join_irreducibles(), n5.meet_irreducibles());
        assert_eq!(d.top(), n5.bottom());
    }
}
