use std::collections::HashMap;

use crate::order::lattice::Lattice;
use crate::order::poset::Poset;
use crate::sets::{format_label_set, labels_of, size_lectic_cmp, BitSet};

/// Whether a family of sets is ordered by inclusion or reverse inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Subset,
    Superset,
}

/// A ring of subsets of a base poset's carrier, viewed as a lattice.
///
/// With [`Direction::Subset`] the members are the order ideals, with
/// [`Direction::Superset`] the order filters.
#[derive(Clone, Debug)]
pub struct SetFamilyLattice {
    base: Poset,
    members: Vec<BitSet>,
    direction: Direction,
    lattice: Lattice,
}

impl SetFamilyLattice {
    /// Builds the lattice of `members`, which must be closed under union
    /// and intersection and contain both `∅` and the full carrier.
    fn new(base: Poset, mut members: Vec<BitSet>, direction: Direction) -> Self {
        members.sort_by(size_lectic_cmp);
        if direction == Direction::Superset {
            members.reverse();
        }
        let n = members.len();
        let labels: Vec<String> = members
            .iter()
            .map(|s| format_label_set(&labels_of(s, base.labels())))
            .collect();
        let index: HashMap<&BitSet, usize> = members.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let below = |a: &BitSet, b: &BitSet| match direction {
            Direction::Subset => a.is_subset(b),
            Direction::Superset => b.is_subset(a),
        };
        let up: Vec<BitSet> = members
            .iter()
            .map(|a| {
                let mut row = BitSet::with_capacity(n);
                for (j, b) in members.iter().enumerate() {
                    if below(a, b) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let poset = Poset::from_up_sets(labels, up).expect("distinct sets have distinct labels");
        // Union and intersection are the lattice operations of a ring of sets.
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for (a, sa) in members.iter().enumerate() {
            for (b, sb) in members.iter().enumerate().skip(a) {
                let mut inter = sa.clone();
                inter.intersect_with(sb);
                let mut uni = sa.clone();
                uni.union_with(sb);
                let (i, u) = (index[&inter], index[&uni]);
                let (m, j) = match direction {
                    Direction::Subset => (i, u),
                    Direction::Superset => (u, i),
                };
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let lattice = Lattice::from_tables(poset, meet, join);
        SetFamilyLattice {
            base,
            members,
            direction,
            lattice,
        }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn members(&self) -> &[BitSet] {
        &self.members
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the lattice element carrying `set`, if it is a member.
    pub fn position(&self, set: &BitSet) -> Option<usize> {
        self.members.iter().position(|m| m == set)
    }

    /// Sorted base labels of the member at lattice index `i`.
    pub fn member_labels(&self, i: usize) -> Vec<String> {
        let mut labels: Vec<String> = labels_of(&self.members[i], self.base.labels())
            .into_iter()
            .map(String::from)
            .collect();
        labels.sort_unstable();
        labels
    }
}

/// Enumerates the down-closed subsets of `p`.
pub(crate) fn down_closed_sets(p: &Poset) -> Vec<BitSet> {
    let n = p.len();
    let order = p.linear_extension();
    let mut out = Vec::new();
    // Walk the linear extension deciding membership; an element may join
    // only if everything below it already has.
    let mut stack = vec![(0usize, BitSet::with_capacity(n))];
    while let Some((pos, set)) = stack.pop() {
        if pos == n {
            out.push(set);
            continue;
        }
        let x = order[pos];
        if p.lower_covers(x).iter().all(|&y| set.contains(y)) {
            let mut with = set.clone();
            with.insert(x);
            stack.push((pos + 1, with));
        }
        stack.push((pos + 1, set));
    }
    out
}

/// All order ideals of `p`, ordered by inclusion.
pub fn order_ideals(p: &Poset) -> SetFamilyLattice {
    SetFamilyLattice::new(p.clone(), down_closed_sets(p), Direction::Subset)
}

/// All order filters of `p`, ordered by reverse inclusion, so the empty
/// filter is the top.
pub fn order_filters(p: &Poset) -> SetFamilyLattice {
    let filters = down_closed_sets(&p.dual());
    SetFamilyLattice::new(p.clone(), filters, Direction::Superset)
}
